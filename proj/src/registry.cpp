#include "qpp/identities.hpp"

#include <algorithm>
#include <utility>

#include "qpp/chebyshev.hpp"
#include "qpp/errors.hpp"
#include "qpp/partitions.hpp"
#include "qpp/pochhammer.hpp"

namespace qpp {

namespace {

using R = BigRational;

QSeries mul_inf(QSeries s, const R& c, int q_exp, int q_step) {
    for (int k = q_exp; k <= s.order(); k += q_step) {
        s = s.mul_binomial(c, k);
    }
    return s;
}

QSeries div_inf(QSeries s, const R& c, int q_exp, int q_step) {
    for (int k = q_exp; k <= s.order(); k += q_step) {
        s = s.div_binomial(c, k);
    }
    return s;
}

BivarSeries bmul_inf(BivarSeries s, const R& c, int z_e, int q_exp, int q_step) {
    for (int k = q_exp; k <= s.order(); k += q_step) {
        s = s.mul_binomial(c, z_e, k);
    }
    return s;
}

BivarSeries bdiv_inf(BivarSeries s, const R& c, int z_e, int q_exp, int q_step) {
    for (int k = q_exp; k <= s.order(); k += q_step) {
        s = s.div_binomial(c, z_e, k);
    }
    return s;
}

ComparisonUnit uni(std::string label, const QSeries& l, const QSeries& r) {
    return ComparisonUnit{std::move(label), BivarSeries::from_qseries(l),
                          BivarSeries::from_qseries(r), true};
}

ComparisonUnit biv(std::string label, BivarSeries l, BivarSeries r) {
    return ComparisonUnit{std::move(label), std::move(l), std::move(r), false};
}

QSeries euler_of(Context& ctx, int n) { return ctx.euler(n).truncated(n); }

/// (q;q)_inf^2 / (-q;q)_inf^2.
QSeries signed_quotient(Context& ctx, int n) {
    QSeries e = euler_of(ctx, n);
    return div_inf(div_inf(e * e, R(-1), 1, 1), R(-1), 1, 1);
}

/// (zq;q) (q/z;q) (z^2 q;q^2) (q/z^2;q^2), all to the first power.
BivarSeries d_product(int n) {
    BivarSeries d = BivarSeries::one(n);
    d = bmul_inf(d, R(1), 1, 1, 1);
    d = bmul_inf(d, R(1), -1, 1, 1);
    d = bmul_inf(d, R(1), 2, 1, 2);
    d = bmul_inf(d, R(1), -2, 1, 2);
    return d;
}

/// (z^2 q;q) (q/z^2;q) / ((-zq;q) (-q/z;q)): the quotient form of the same series.
BivarSeries d_quotient(int n) {
    BivarSeries d = BivarSeries::one(n);
    d = bmul_inf(d, R(1), 2, 1, 1);
    d = bmul_inf(d, R(1), -2, 1, 1);
    d = bdiv_inf(d, R(-1), 1, 1, 1);
    d = bdiv_inf(d, R(-1), -1, 1, 1);
    return d;
}

/// sum_{n>=1} q^n (q;q)_{n-1}^2 / (-q^n;q)_? in the fixed pattern
/// t_n = q^n prod_{j<n}(1-q^j)^2 / (1+q^n)^2; returns sum of all t_n.
QSeries f_term_sum(int order) {
    QSeries acc(order);
    if (order < 1) {
        return acc;
    }
    QSeries t = QSeries::one(order).shifted(1)
                    .div_binomial(R(-1), 1)
                    .div_binomial(R(-1), 1);
    acc = t;
    for (int n = 2; n <= order; ++n) {
        t = t.mul_binomial(R(1), n - 1)
                .mul_binomial(R(1), n - 1)
                .shifted(1)
                .div_binomial(R(-1), n)
                .div_binomial(R(-1), n);
        acc = acc + t;
    }
    return acc;
}

/// (5q^k + 6q^{2k} + 5q^{3k}) / (1-q^{2k})^2.
QSeries inner_a(int k, int order) {
    QSeries num(order);
    if (k <= order) num.add_coeff(k, R(5));
    if (2 * k <= order) num.add_coeff(2 * k, R(6));
    if (3 * k <= order) num.add_coeff(3 * k, R(5));
    return num.div_binomial(R(1), 2 * k).div_binomial(R(1), 2 * k);
}

/// q^k / (1+q^k)^2.
QSeries inner_b(int k, int order) {
    QSeries num(order);
    if (k <= order) num.add_coeff(k, R(1));
    return num.div_binomial(R(-1), k).div_binomial(R(-1), k);
}

/// sum_{n>=1} t_n * (sum_{k<n} inner_a(k) + inner_b(n)) with t_n as above.
QSeries f_weighted_sum(int order) {
    QSeries acc(order);
    if (order < 1) {
        return acc;
    }
    QSeries t = QSeries::one(order).shifted(1)
                    .div_binomial(R(-1), 1)
                    .div_binomial(R(-1), 1);
    QSeries inner = inner_b(1, order);
    QSeries b_prev = inner;
    acc = t * inner;
    for (int n = 2; n <= order; ++n) {
        t = t.mul_binomial(R(1), n - 1)
                .mul_binomial(R(1), n - 1)
                .shifted(1)
                .div_binomial(R(-1), n)
                .div_binomial(R(-1), n);
        QSeries b_cur = inner_b(n, order);
        inner = inner - b_prev + inner_a(n - 1, order) + b_cur;
        b_prev = b_cur;
        acc = acc + t * inner;
    }
    return acc;
}

/// Alternating pentagonal tail sum_{n>=1} (-1)^n q^{w_n} (1+q^n) / (1-q^n)^2.
QSeries pentagonal_tail(int order) {
    QSeries acc(order);
    for (int n = 1;; ++n) {
        long long w = static_cast<long long>(n) * (3LL * n + 1) / 2;
        if (w > order) {
            break;
        }
        QSeries t(order);
        t.add_coeff(static_cast<int>(w), R(1));
        if (w + n <= order) {
            t.add_coeff(static_cast<int>(w + n), R(1));
        }
        t = t.div_binomial(R(1), n).div_binomial(R(1), n);
        acc = acc + t.scaled(R(parity_sign(n)));
    }
    return acc;
}

/// Coefficients p_sc(0..order): partitions into distinct odd parts.
std::vector<BigInt> selfconj_vector(int order) {
    std::vector<BigInt> dp(static_cast<std::size_t>(order) + 1);
    dp[0] = 1;
    for (int part = 1; part <= order; part += 2) {
        for (int w = order; w >= part; --w) {
            dp[static_cast<std::size_t>(w)] += dp[static_cast<std::size_t>(w - part)];
        }
    }
    return dp;
}

std::vector<ComparisonUnit> build_pentagonal(Context& ctx, int n) {
    QSeries rhs(n);
    for (const PentagonalIndex& p : pentagonal_numbers_upto(n)) {
        rhs.add_coeff(p.value, R(parity_sign(p.ell)));
    }
    return {uni("product vs alternating sum", euler_of(ctx, n), rhs)};
}

std::vector<ComparisonUnit> build_gf_spt_new(Context& ctx, int n) {
    QSeries lhs = ctx.spt(n).truncated(n);
    QSeries rhs = div_inf(lambert_all(n) + pentagonal_tail(n), R(1), 1, 1);
    return {uni("direct sum vs split form", lhs, rhs)};
}

std::vector<ComparisonUnit> build_watson_spl(Context&, int n) {
    BivarSeries t = BivarSeries::one(n);
    BivarSeries lhs = t;
    for (int k = 1; k <= n; ++k) {
        t = t.mul_binomial(R(1), 1, k - 1)
                .mul_binomial(R(1), -1, k - 1)
                .shifted(1)
                .div_binomial(R(1), 0, k);
        lhs = lhs + t;
    }
    BivarSeries bracket = BivarSeries::one(n);
    BivarSeries p = BivarSeries::one(n);
    for (int k = 1;; ++k) {
        long long w = static_cast<long long>(k) * (3LL * k + 1) / 2;
        if (w > n) {
            break;
        }
        p = p.mul_binomial(R(1), 1, k - 1)
                .mul_binomial(R(1), -1, k - 1)
                .div_binomial(R(1), 1, k)
                .div_binomial(R(1), -1, k);
        BivarSeries b = (p + p.shifted(k)).scaled(R(parity_sign(k)));
        bracket = bracket + b.shifted(static_cast<int>(w));
    }
    BivarSeries pre = bmul_inf(BivarSeries::one(n), R(1), 1, 1, 1);
    pre = bmul_inf(pre, R(1), -1, 1, 1);
    pre = bdiv_inf(pre, R(1), 0, 1, 1);
    pre = bdiv_inf(pre, R(1), 0, 1, 1);
    return {biv("sum vs pentagonal bracket", lhs, pre * bracket)};
}

std::vector<ComparisonUnit> build_diff2(Context& ctx, int n) {
    BivarSeries f = bmul_inf(BivarSeries::one(n), R(1), 1, 1, 1);
    f = bmul_inf(f, R(1), -1, 1, 1);
    QSeries lhs = f.diff_z().diff_z().eval_z(R(1)).scaled(R(-1, 2));
    QSeries e = euler_of(ctx, n);
    QSeries rhs = (e * e) * lambert_all(n);
    return {uni("second derivative vs weighted product", lhs, rhs)};
}

std::vector<ComparisonUnit> build_dzq_forms(Context& ctx, int n) {
    BivarSeries a = d_product(n);
    BivarSeries b = d_quotient(n);
    QSeries e = euler_of(ctx, n);
    QSeries half = mul_inf(mul_inf(e * e, R(1), 1, 2), R(1), 1, 2);
    return {biv("four-factor vs quotient form", a, b),
            uni("value at z = 1", a.eval_z(R(1)), half)};
}

std::vector<ComparisonUnit> build_main_id(Context&, int n) {
    struct Triple {
        R alpha, beta, gamma;
    };
    const std::vector<Triple> triples = {
        {R(2), R(3), R(5)},        {R(1, 2), R(-1), R(1, 3)},
        {R(3), R(5), R(2)},        {R(-2), R(7), R(1, 5)},
        {R(5), R(1, 2), R(-3)},    {R(2, 3), R(5), R(7)},
    };
    std::vector<ComparisonUnit> units;
    int idx = 0;
    for (const Triple& tr : triples) {
        const R& al = tr.alpha;
        const R& be = tr.beta;
        const R& ga = tr.gamma;
        R mix = al * ga / be;
        QSeries lhs = QSeries::one(n);
        if (n >= 1) {
            QSeries t = QSeries::one(n)
                            .scaled((1 - al) * (1 - ga) / (1 - be))
                            .shifted(1)
                            .div_binomial(mix, 2);
            lhs = lhs + t;
            for (int k = 2; k <= n; ++k) {
                t = t.mul_binomial(al, k - 1)
                        .mul_binomial(ga, k - 1)
                        .shifted(1)
                        .div_binomial(be, k - 1)
                        .div_binomial(mix, k + 1);
                lhs = lhs + t;
            }
        }
        QSeries a = QSeries::one(n)
                        .scaled((1 - al) * (1 - ga) / (be * (1 - be)))
                        .shifted(1);
        a = mul_inf(a, al, 1, 1);
        a = mul_inf(a, ga, 1, 1);
        a = a.div_binomial(al / be, 1).div_binomial(ga / be, 1);
        a = div_inf(a, be, 1, 1);
        a = div_inf(a, mix, 2, 1);
        QSeries b = QSeries::one(n)
                        .mul_binomial(R(1) / be, 1)
                        .mul_binomial(al * ga / be, 1)
                        .div_binomial(ga / be, 1)
                        .div_binomial(al / be, 1);
        units.push_back(uni("parameter set " + std::to_string(++idx), lhs, a + b));
    }
    return units;
}

std::vector<ComparisonUnit> build_chan_mao_1(Context&, int n) {
    const std::vector<R> xs = {R(2), R(1, 2), R(-3)};
    std::vector<ComparisonUnit> units;
    int idx = 0;
    for (const R& x : xs) {
        BivarSeries t = BivarSeries::one(n);
        BivarSeries acc = t;
        for (int k = 1; k <= n; ++k) {
            t = t.mul_binomial(x, 0, k - 1)
                    .mul_binomial(R(1) / x, 0, k - 1)
                    .shifted(1)
                    .div_binomial(R(1), 1, k)
                    .div_binomial(R(1), -1, k);
            acc = acc + t;
        }
        LaurentPoly clear;
        clear.add_term(0, R(1));
        clear.add_term(1, -(x + R(1) / x));
        clear.add_term(2, R(1));
        BivarSeries lhs = acc.laurent_scaled(clear);

        LaurentPoly sq;
        sq.add_term(0, R(1));
        sq.add_term(1, R(-2));
        sq.add_term(2, R(1));
        BivarSeries p = BivarSeries::one(n).laurent_scaled(
            LaurentPoly::monomial((1 - x) * (1 - R(1) / x), 1));
        p = bmul_inf(p, x, 0, 1, 1);
        p = bmul_inf(p, R(1) / x, 0, 1, 1);
        p = bdiv_inf(p, R(1), 1, 1, 1);
        p = bdiv_inf(p, R(1), -1, 1, 1);
        BivarSeries rhs = BivarSeries::constant(sq, n) + p;
        units.push_back(biv("sample point " + std::to_string(++idx),
                            std::move(lhs), std::move(rhs)));
    }
    return units;
}

std::vector<ComparisonUnit> build_chan_mao_2(Context&, int n) {
    const std::vector<R> xs = {R(2), R(1, 2), R(-3)};
    std::vector<ComparisonUnit> units;
    int idx = 0;
    for (const R& x : xs) {
        BivarSeries t = BivarSeries::one(n).div_binomial(R(1), -1, 1);
        BivarSeries acc = t;
        for (int k = 1; k <= n; ++k) {
            t = t.mul_binomial(x, 0, k - 1)
                    .mul_binomial(R(1) / x, 0, k)
                    .shifted(1)
                    .div_binomial(R(1), 1, k)
                    .div_binomial(R(1), -1, k + 1);
            acc = acc + t;
        }
        LaurentPoly clear;
        clear.add_term(0, x);
        clear.add_term(1, R(-1));
        BivarSeries lhs =
            acc.laurent_scaled(clear).mul_binomial(R(1) / x, -1, 1);

        BivarSeries p = BivarSeries::one(n).scaled(1 - x);
        p = bmul_inf(p, x, 0, 1, 1);
        p = bmul_inf(p, R(1) / x, 0, 1, 1);
        p = bdiv_inf(p, R(1), 1, 1, 1);
        p = bdiv_inf(p, R(1), -1, 1, 1);
        LaurentPoly lin;
        lin.add_term(0, R(1));
        lin.add_term(1, R(-1));
        BivarSeries rhs = BivarSeries::constant(lin, n) - p;
        units.push_back(biv("sample point " + std::to_string(++idx),
                            std::move(lhs), std::move(rhs)));
    }
    return units;
}

std::vector<ComparisonUnit> build_spt_ana(Context& ctx, int n) {
    BivarSeries s = ctx.s_series(n).truncated(n);
    BivarSeries dq = d_quotient(n);

    LaurentPoly half;
    half.add_term(1, R(1));
    half.add_term(0, R(-1));
    half.add_term(-1, R(1));
    LaurentPoly full;
    full.add_term(1, R(-1));
    full.add_term(0, R(2));
    full.add_term(-1, R(-1));
    std::vector<ComparisonUnit> units;
    units.push_back(biv("cleared form",
                        s.laurent_scaled(half),
                        BivarSeries::one(n) - dq.laurent_scaled(full)));

    const std::vector<R> vs = {R(2), R(1, 2), R(-3)};
    int idx = 0;
    for (const R& v : vs) {
        R iv = R(1) / v;
        R c1 = -(1 - v) * (1 - iv) / (v * (1 - iv + iv * iv));
        R c2 = (1 + iv) / (v * (1 + iv * iv * iv));
        QSeries dv = mul_inf(QSeries::one(n), iv * iv, 1, 1);
        dv = mul_inf(dv, v * v, 1, 1);
        dv = div_inf(dv, -iv, 1, 1);
        dv = div_inf(dv, -v, 1, 1);
        QSeries rhs = dv.scaled(c1) + QSeries::one(n).scaled(c2);
        units.push_back(uni("sample point " + std::to_string(++idx),
                            s.eval_z(v), rhs));
    }
    return units;
}

std::vector<ComparisonUnit> build_quintuple_deriv(Context& ctx, int n) {
    QSeries lhs = d_product(n).diff_z().diff_z().eval_z(R(1));
    QSeries e = euler_of(ctx, n);
    QSeries half2 = mul_inf(mul_inf(e * e, R(1), 1, 2), R(1), 1, 2);
    QSeries rhs1 =
        (half2 * (lambert_all(n).scaled(R(3)) + lambert_odd(n).scaled(R(2))))
            .scaled(R(-2));
    QSeries rhs2 = gordon_series(n).q_derivative().scaled(R(2)).divided_by(e);
    return {uni("derivative vs weighted products", lhs, rhs1),
            uni("derivative vs theta route", lhs, rhs2)};
}

std::vector<ComparisonUnit> build_blospt(Context& ctx, int n) {
    QSeries lhs = f_term_sum(n).scaled(R(4));
    QSeries x = signed_quotient(ctx, n);
    QSeries body = eta_quotient({{1, 4}, {2, -2}}, n).assert_integral();
    return {uni("folded sum vs product gap", lhs, QSeries::one(n) - x),
            uni("product vs eta form", x, body.truncated(n))};
}

std::vector<ComparisonUnit> build_bibasic_1(Context& ctx, int n) {
    QSeries acc(n);
    if (n >= 1) {
        QSeries t = QSeries::one(n).shifted(1).div_binomial(R(-1), 2);
        acc = t;
        for (int k = 2; k <= n; ++k) {
            t = t.mul_binomial(R(-1), k - 1)
                    .mul_binomial(R(-1), k - 1)
                    .shifted(1)
                    .div_binomial(R(-1), 2 * k);
            acc = acc + t;
        }
    }
    QSeries lhs = QSeries::one(n) + acc.scaled(R(4));

    QSeries e = euler_of(ctx, n);
    QSeries a = mul_inf(mul_inf(QSeries::one(n), R(-1), 1, 1), R(-1), 1, 1);
    a = div_inf(a, R(-1), 2, 2);
    a = a.scaled(R(2)) - QSeries::one(n);

    QSeries q2 = qs_poch_infinite(R(1), 2, 2, n);
    QSeries b = (q2 * q2) * q2;
    b = b.divided_by(e * e);
    b = div_inf(b, R(1), 4, 4);
    b = b.scaled(R(2)) - QSeries::one(n);

    QSeries c = mul_inf(QSeries::one(n), R(1), 2, 4);
    c = div_inf(div_inf(c, R(1), 1, 2), R(1), 1, 2);
    c = c.scaled(R(2)) - QSeries::one(n);

    return {uni("sum vs first product form", lhs, a),
            uni("first vs second product form", a, b),
            uni("second vs third product form", b, c)};
}

std::vector<ComparisonUnit> build_bibasic_2(Context& ctx, int n) {
    QSeries acc(n);
    if (n >= 1) {
        QSeries t = QSeries::one(n)
                        .mul_binomial(R(-1), 1)
                        .shifted(1)
                        .div_binomial(R(-1), 3);
        acc = t;
        for (int k = 2; k <= n; ++k) {
            t = t.mul_binomial(R(-1), k)
                    .mul_binomial(R(1), 3 * (k - 1))
                    .shifted(1)
                    .div_binomial(R(1), k - 1)
                    .div_binomial(R(-1), 3 * k);
            acc = acc + t;
        }
    }
    QSeries lhs = QSeries::one(n) + acc.scaled(R(3));

    QSeries e = euler_of(ctx, n);
    QSeries r = mul_inf(mul_inf(QSeries::one(n), R(1), 3, 3), R(-1), 1, 1);
    r = div_inf(r, R(-1), 3, 3);
    r = r.divided_by(e);
    QSeries rhs = r.scaled(R(3, 2)) - QSeries::constant(R(1, 2), n);
    return {uni("sum vs product form", lhs, rhs)};
}

std::vector<ComparisonUnit> build_blorank(Context& ctx, int n) {
    const std::vector<std::pair<R, R>> params = {
        {R(1), R(1)}, {R(2), R(1)}, {R(1, 2), R(3)}};
    const NTable& tab = ctx.table(15);
    std::vector<ComparisonUnit> units;
    int idx = 0;
    for (const auto& [d, e] : params) {
        BivarSeries lhs(n);
        for (const auto& [key, cnt] : tab.counts) {
            if (key[0] > n) {
                continue;
            }
            R w = rat_pow(d, key[1]) * rat_pow(e, key[2]) * R(cnt);
            lhs.add_coeff_poly(key[0], LaurentPoly::monomial(w, key[3]));
        }
        units.push_back(biv("weight pair " + std::to_string(++idx),
                            std::move(lhs), blorank_series(d, e, n)));
    }
    return units;
}

std::vector<ComparisonUnit> build_corblo(Context& ctx, int n) {
    const NTable& tab = ctx.table(15);
    BivarSeries rhs(n);
    for (const auto& [key, cnt] : tab.counts) {
        if (key[0] > n) {
            continue;
        }
        int m = key[3] + 2 * key[2] - 2 * key[1];
        R w = R(parity_sign(key[1] + key[2] + m)) * R(cnt);
        rhs.add_coeff_poly(key[0], LaurentPoly::monomial(w, m));
    }
    return {biv("series vs signed table sum", ctx.s_series(n).truncated(n), rhs)};
}

std::vector<ComparisonUnit> build_blocoeff(Context& ctx, int n) {
    BivarSeries es = ctx.s_series(n).truncated(n);
    for (int k = 1; k <= n; ++k) {
        es = es.mul_binomial(R(1), 0, k);
    }
    BivarSeries predicted(n);
    for (int w = 0; w <= n; ++w) {
        LaurentPoly pol;
        for (int m = -3 * w - 6; m <= 3 * w + 16; ++m) {
            long long c = piecewise_coeff(m, w);
            if (c != 0) {
                pol.add_term(m, R(c));
            }
        }
        predicted.set_coeff_poly(w, pol);
    }
    std::vector<ComparisonUnit> units;
    units.push_back(biv("series vs piecewise formula", es, predicted));

    int reach = std::min(n, 7);
    const NTable& tab = ctx.table(15);
    BivarSeries multisum(reach);
    for (int w = 0; w <= reach; ++w) {
        LaurentPoly pol;
        for (int m = -3 * w - 6; m <= 3 * w + 16; ++m) {
            BigInt v = blocoeff_multisum(m, w, tab);
            if (v != 0) {
                pol.add_term(m, R(v));
            }
        }
        multisum.set_coeff_poly(w, pol);
    }
    units.push_back(
        biv("piecewise formula vs multi-sum", predicted.truncated(reach), multisum));
    return units;
}

std::vector<ComparisonUnit> build_idenp(Context& ctx, int n) {
    const NTable& tab = ctx.table(15);
    QSeries lhs(n);
    QSeries rhs(n);
    for (int w = 0; w <= n; ++w) {
        lhs.set_coeff(w, R(idenp_lhs(w, tab)));
        rhs.set_coeff(w, R(idenp_rhs(w)));
    }
    return {uni("moment sum vs partition form", lhs, rhs)};
}

std::vector<ComparisonUnit> build_th3(Context& ctx, int n) {
    QSeries lhs = f_term_sum(n).scaled(R(5)) - f_weighted_sum(n).scaled(R(4));
    QSeries x = signed_quotient(ctx, n);
    QSeries rhs =
        x * (lambert_all(n).scaled(R(3)) + lambert_odd(n).scaled(R(2)));
    return {uni("weighted sum vs product form", lhs, rhs)};
}

std::vector<ComparisonUnit> build_spt_mod(Context& ctx, int n) {
    QSeries lhs = f_weighted_sum(n).scaled(R(4));
    QSeries x_eta = eta_quotient({{1, 4}, {2, -2}}, n).assert_integral().truncated(n);
    QSeries theta_over =
        theta_shimura(n).frac_div(eta_quotient({{1, 1}}, n)).assert_integral().truncated(n);
    QSeries rhs1 = QSeries::constant(R(5, 4), n) - x_eta.scaled(R(31, 24)) +
                   theta_over.scaled(R(1, 24));
    QSeries x = signed_quotient(ctx, n);
    QSeries rhs2 = (QSeries::one(n) - x).scaled(R(5, 4)) -
                   x * (lambert_all(n).scaled(R(5)) - lambert_even(n).scaled(R(4)));
    return {uni("inner sum vs eta and theta form", lhs, rhs1),
            uni("inner sum vs quotient form", lhs, rhs2)};
}

std::vector<ComparisonUnit> build_etatheta(Context&, int n) {
    QSeries lhs = eta_quotient({{1, 5}, {2, -2}}, n).body().truncated(n);
    QSeries rhs(n);
    for (long long k = 1;; ++k) {
        long long e = (k * k - 1) / 24;
        if ((k * k - 1) % 24 != 0) {
            continue;
        }
        if (e > n) {
            break;
        }
        int c = chi12(k);
        if (c != 0) {
            rhs.add_coeff(static_cast<int>(e), R(c) * R(k));
        }
    }
    return {uni("eta body vs weighted theta", lhs, rhs)};
}

std::vector<ComparisonUnit> build_qpi(Context&, int n) {
    BivarSeries rhs = bmul_inf(BivarSeries::one(n), R(1), 0, 1, 1);
    rhs = bmul_inf(rhs, R(1), 1, 1, 1);
    rhs = bmul_inf(rhs, R(1), -1, 1, 1);
    rhs = bmul_inf(rhs, R(1), 2, 1, 2);
    rhs = bmul_inf(rhs, R(1), -2, 1, 2);
    rhs = rhs.mul_binomial(R(1), -1, 0);
    return {biv("bilateral sum vs product", quintuple_lhs(n), rhs)};
}

std::vector<ComparisonUnit> build_qpi_half(Context&, int n) {
    BivarSeries lhs(n);
    for (int k = -n - 2; k <= n + 2; ++k) {
        long long e1 = 3LL * k * k - 2LL * k;
        if (e1 >= 0 && e1 <= n) {
            lhs.add_coeff_poly(static_cast<int>(e1),
                               LaurentPoly::monomial(R(1), 3 * k));
        }
        long long e2 = 3LL * k * k + 4LL * k + 1;
        if (e2 >= 0 && e2 <= n) {
            lhs.add_coeff_poly(static_cast<int>(e2),
                               LaurentPoly::monomial(R(-1), -3 * k - 1));
        }
    }
    BivarSeries rhs = bmul_inf(BivarSeries::one(n), R(1), 0, 2, 2);
    rhs = bmul_inf(rhs, R(1), 1, 1, 2);
    rhs = bmul_inf(rhs, R(1), -1, 1, 2);
    rhs = bmul_inf(rhs, R(1), 2, 4, 4);
    rhs = bmul_inf(rhs, R(1), -2, 4, 4);
    rhs = rhs.mul_binomial(R(1), 2, 0);
    return {biv("shifted bilateral sum vs product", lhs, rhs)};
}

std::vector<ComparisonUnit> build_gordon(Context& ctx, int n) {
    QSeries e = euler_of(ctx, n);
    QSeries rhs = mul_inf(mul_inf((e * e) * e, R(1), 1, 2), R(1), 1, 2);
    return {uni("weighted sum vs cubed product", gordon_series(n), rhs)};
}

std::vector<ComparisonUnit> build_jtp(Context& ctx, int n) {
    QSeries rhs = div_inf(euler_of(ctx, n), R(-1), 1, 1);
    return {uni("signed squares vs quotient", jtp_square_series(n), rhs)};
}

std::vector<ComparisonUnit> build_psi(Context& ctx, int n) {
    QSeries q2 = qs_poch_infinite(R(1), 2, 2, n);
    QSeries rhs = (q2 * q2).divided_by(euler_of(ctx, n));
    return {uni("bilateral sum vs quotient", psi_series(n), rhs)};
}

QSeries partition_slice(Context& ctx, int n, int residue) {
    QSeries s(n);
    for (int k = 0; k <= n; ++k) {
        s.set_coeff(k, R(ctx.partition_at(2 * k + residue)));
    }
    return s;
}

std::vector<ComparisonUnit> build_disspar_even(Context& ctx, int n) {
    QSeries rhs = mul_inf(QSeries::one(n), R(-1), 3, 8);
    rhs = mul_inf(rhs, R(-1), 5, 8);
    rhs = mul_inf(rhs, R(1), 8, 8);
    rhs = div_inf(div_inf(rhs, R(1), 1, 1), R(1), 1, 1);
    return {uni("even slice vs product", partition_slice(ctx, n, 0), rhs)};
}

std::vector<ComparisonUnit> build_disspar_odd(Context& ctx, int n) {
    QSeries rhs = mul_inf(QSeries::one(n), R(-1), 1, 8);
    rhs = mul_inf(rhs, R(-1), 7, 8);
    rhs = mul_inf(rhs, R(1), 8, 8);
    rhs = div_inf(div_inf(rhs, R(1), 1, 1), R(1), 1, 1);
    return {uni("odd slice vs product", partition_slice(ctx, n, 1), rhs)};
}

QSeries selfconj_slice(int n, int residue) {
    std::vector<BigInt> sc = selfconj_vector(2 * n + residue);
    QSeries s(n);
    for (int k = 0; k <= n; ++k) {
        s.set_coeff(k, R(sc[static_cast<std::size_t>(2 * k + residue)]));
    }
    return s;
}

std::vector<ComparisonUnit> build_slater_38(Context& ctx, int n) {
    QSeries acc = QSeries::one(n);
    QSeries r = QSeries::one(n);
    for (int k = 1;; ++k) {
        long long e = 2LL * k * k;
        if (e > n) {
            break;
        }
        r = r.div_binomial(R(1), 2 * k - 1).div_binomial(R(1), 2 * k);
        acc = acc + r.shifted(static_cast<int>(e));
    }
    QSeries rhs = mul_inf(QSeries::one(n), R(-1), 3, 8);
    rhs = mul_inf(rhs, R(-1), 5, 8);
    rhs = mul_inf(rhs, R(1), 8, 8);
    rhs = div_inf(rhs, R(1), 2, 2);
    QSeries jq = div_inf(euler_of(ctx, n), R(-1), 1, 1);
    return {uni("shifted sum vs product", acc, rhs),
            uni("shifted sum vs even slice", acc, selfconj_slice(n, 0)),
            uni("product vs folded even slice", rhs, jq * partition_slice(ctx, n, 0))};
}

std::vector<ComparisonUnit> build_slater_39(Context& ctx, int n) {
    QSeries acc = QSeries::one(n).div_binomial(R(1), 1);
    QSeries r = acc;
    for (int k = 1;; ++k) {
        long long e = 2LL * k * k + 2LL * k;
        if (e > n) {
            break;
        }
        r = r.div_binomial(R(1), 2 * k).div_binomial(R(1), 2 * k + 1);
        acc = acc + r.shifted(static_cast<int>(e));
    }
    QSeries rhs = mul_inf(QSeries::one(n), R(-1), 1, 8);
    rhs = mul_inf(rhs, R(-1), 7, 8);
    rhs = mul_inf(rhs, R(1), 8, 8);
    rhs = div_inf(rhs, R(1), 2, 2);
    QSeries jq = div_inf(euler_of(ctx, n), R(-1), 1, 1);
    return {uni("shifted sum vs product", acc, rhs),
            uni("shifted sum vs odd slice", acc, selfconj_slice(n, 1)),
            uni("product vs folded odd slice", rhs, jq * partition_slice(ctx, n, 1))};
}

std::vector<ComparisonUnit> build_claim1(Context& ctx, int n) {
    std::vector<BigInt> sc = selfconj_vector(n);
    QSeries lhs(n);
    QSeries rhs(n);
    for (int w = 0; w <= n; ++w) {
        lhs.set_coeff(w, R(sc[static_cast<std::size_t>(w)]));
        BigInt v = ctx.partition_at(w);
        for (int j = 1; 2 * j * j <= w; ++j) {
            BigInt term = 2 * ctx.partition_at(w - 2 * j * j);
            v += parity_sign(j) > 0 ? term : -term;
        }
        rhs.set_coeff(w, R(v));
    }
    return {uni("distinct-odd counts vs alternating form", lhs, rhs)};
}

std::vector<ComparisonUnit> build_parlemma(Context&, int n) {
    QSeries lhs(n);
    for (int w = 0; w <= n; ++w) {
        lhs.set_coeff(w, R(a_of_n(w)));
    }
    QSeries rhs = mul_inf(QSeries::one(n), R(-1), 1, 1);
    rhs = div_inf(div_inf(rhs, R(1), 1, 1), R(1), 1, 1);
    return {uni("alternating convolution vs product", lhs, rhs)};
}

std::vector<ComparisonUnit> build_parlemma_odd(Context& ctx, int n) {
    QSeries lhs(n);
    for (int w = 0; w <= n; ++w) {
        BigInt acc = 0;
        for (int k = 0; k <= 2 * w + 1; ++k) {
            BigInt t = ctx.partition_at(k) * ctx.partition_at(2 * w + 1 - k);
            acc += parity_sign(k) > 0 ? t : -t;
        }
        lhs.set_coeff(w, R(acc));
    }
    return {uni("odd convolution vanishes", lhs, QSeries(n))};
}

std::vector<ComparisonUnit> build_sptpn(Context& ctx, int n) {
    QSeries lhs(n);
    QSeries rhs(n);
    for (int w = 0; w <= n; ++w) {
        lhs.set_coeff(w, R(spt_count(w)));
        rhs.set_coeff(w, R(w) * R(ctx.partition_at(w)) - R(rank_moment2(w), 2));
    }
    return {uni("smallest-part totals vs moment form", lhs, rhs)};
}

std::vector<ComparisonUnit> build_diffeuler(Context& ctx, int n) {
    QSeries lhs(n);
    for (int w = 0; w <= n; ++w) {
        lhs.set_coeff(w, R(w) * R(ctx.partition_at(w)));
    }
    QSeries rhs = div_inf(lambert_all(n), R(1), 1, 1);
    return {uni("weighted counts vs divisor sum", lhs, rhs)};
}

std::vector<ComparisonUnit> build_diffpsc(Context&, int n) {
    std::vector<BigInt> sc = selfconj_vector(n);
    QSeries lhs(n);
    for (int w = 0; w <= n; ++w) {
        BigInt v = sc[static_cast<std::size_t>(w)];
        lhs.set_coeff(w, R(parity_sign(w)) * R(v) * R(w));
    }
    QSeries rhs = mul_inf(lambert_odd(n), R(1), 1, 2).scaled(R(-1));
    return {uni("signed weighted counts vs odd divisor sum", lhs, rhs)};
}

std::vector<ComparisonUnit> build_logdiffsp(Context& ctx, int n) {
    QSeries lhs = lambert_all(n).scaled(R(3)) + lambert_odd(n).scaled(R(2));
    QSeries dp(n);
    std::vector<BigInt> sc = selfconj_vector(n);
    QSeries dsc(n);
    for (int w = 0; w <= n; ++w) {
        dp.set_coeff(w, R(w) * R(ctx.partition_at(w)));
        dsc.set_coeff(w, R(parity_sign(w)) * R(sc[static_cast<std::size_t>(w)]) * R(w));
    }
    QSeries e = euler_of(ctx, n);
    QSeries rhs1 = (e * dp).scaled(R(3)) -
                   mul_inf(dsc, R(-1), 1, 1).scaled(R(2));
    QSeries rhs2 = (e * dp).scaled(R(3)) -
                   div_inf(dsc, R(1), 1, 2).scaled(R(2));
    return {uni("combined divisor sums vs derivative split", lhs, rhs1),
            uni("inverse-product variant", lhs, rhs2)};
}

std::vector<ComparisonUnit> build_diffk_lemma(Context& ctx, int n) {
    LaurentPoly wedge;
    wedge.add_term(0, R(2));
    wedge.add_term(1, R(-1));
    wedge.add_term(-1, R(-1));
    struct Fixture {
        std::string name;
        BivarSeries f;
    };
    BivarSeries sym = bmul_inf(BivarSeries::one(n), R(1), 1, 1, 1);
    sym = bmul_inf(sym, R(1), -1, 1, 1);
    std::vector<Fixture> fixtures;
    fixtures.push_back({"symmetric product", sym});
    fixtures.push_back({"quintuple quotient", d_product(n)});
    fixtures.push_back({"central sum", ctx.s_series(n).truncated(n)});
    const R kfact[5] = {R(1), R(1), R(2), R(6), R(24)};
    std::vector<ComparisonUnit> units;
    for (const Fixture& fx : fixtures) {
        QSeries e0 = fx.f.eval_z(R(1));
        QSeries e1 = fx.f.diff_z().eval_z(R(1));
        QSeries e2 = fx.f.diff_z().diff_z().eval_z(R(1));
        BivarSeries g = fx.f.laurent_scaled(wedge);
        BivarSeries gd = g;
        for (int k = 2; k <= 4; ++k) {
            gd = k == 2 ? g.diff_z().diff_z() : gd.diff_z();
            QSeries lhs =
                gd.eval_z(R(1)).scaled(R(-parity_sign(k)) / kfact[k]);
            QSeries rhs = e0;
            if (k >= 3) {
                rhs = rhs - e1;
            }
            if (k >= 4) {
                rhs = rhs + e2.scaled(R(1, 2));
            }
            units.push_back(uni("k=" + std::to_string(k) + " on " + fx.name,
                                lhs, rhs));
        }
    }
    return units;
}

std::vector<ComparisonUnit> build_cong_p(Context& ctx, int n, int mod, int shift) {
    int len = (n - shift) / mod;
    QSeries lhs(std::max(len, 0));
    for (int k = 0; k <= len; ++k) {
        BigInt residue = ctx.partition_at(mod * k + shift) % mod;
        lhs.set_coeff(k, R(residue));
    }
    return {uni("residues vanish", lhs, QSeries(std::max(len, 0)))};
}

std::vector<ComparisonUnit> build_cong_spt(Context& ctx, int n, int mod, int shift) {
    int len = (n - shift) / mod;
    const QSeries& s = ctx.spt(n);
    QSeries lhs(std::max(len, 0));
    for (int k = 0; k <= len; ++k) {
        BigInt v = rat_to_integer(s.coeff(mod * k + shift));
        lhs.set_coeff(k, R(v % mod));
    }
    return {uni("residues vanish", lhs, QSeries(std::max(len, 0)))};
}

std::vector<ComparisonUnit> build_deri4th(Context& ctx, int n) {
    BivarSeries s = ctx.s_series(n).truncated(n);
    QSeries lhs =
        s.diff_z().diff_z().diff_z().diff_z().eval_z(R(1)).scaled(R(-1, 24));
    QSeries rhs = f_term_sum(n).scaled(R(5)) - f_weighted_sum(n).scaled(R(4));
    return {uni("fourth derivative vs weighted sum", lhs, rhs)};
}

} // namespace

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = [] {
        std::vector<CheckDef> v;
        auto add = [&v](std::string id, std::string desc, std::string anchor,
                        int dflt, int cap,
                        std::function<std::vector<ComparisonUnit>(Context&, int)> fn) {
            v.push_back(CheckDef{std::move(id), std::move(desc), std::move(anchor),
                                 dflt, cap, std::move(fn)});
        };
        add("pentagonal", "Euler product expands as the alternating pentagonal series",
            "euler-expansion", 40, 200, build_pentagonal);
        add("gf-spt-new", "Smallest-parts series splits into divisor and pentagonal parts",
            "spt-splitting", 40, 200, build_gf_spt_new);
        add("watson-spl", "Symbolic rank sum matches its pentagonal bracket transform",
            "rank-transformation", 30, 30, build_watson_spl);
        add("diff2", "Second z-derivative of the symmetric product yields divisor weights",
            "second-derivative-weights", 30, 100, build_diff2);
        add("dzq-forms", "Two constructions of the central quotient series agree",
            "theta-quotient-forms", 25, 30, build_dzq_forms);
        add("main-id", "Three-parameter transformation at six rational parameter sets",
            "three-parameter-sum", 40, 60, build_main_id);
        add("chan-mao-1", "First reciprocal sum in cleared polynomial form",
            "reciprocal-sum-1", 30, 30, build_chan_mao_1);
        add("chan-mao-2", "Second reciprocal sum in cleared polynomial form",
            "reciprocal-sum-2", 30, 30, build_chan_mao_2);
        add("spt-ana", "Self-dual sum equals its product side, cleared and sampled",
            "self-dual-sum", 30, 30, build_spt_ana);
        add("quintuple-deriv", "Second derivative of the quintuple quotient, two routes",
            "quintuple-derivative", 30, 60, build_quintuple_deriv);
        add("blospt", "Folded pair sum measures the signed product gap",
            "signed-pair-split", 40, 200, build_blospt);
        add("bibasic-1", "First two-base sum with chained product forms",
            "two-base-sum-1", 40, 100, build_bibasic_1);
        add("bibasic-2", "Second two-base sum against its product form",
            "two-base-sum-2", 40, 100, build_bibasic_2);
        add("blorank", "Counting table reproduces the two-parameter rank series",
            "pair-rank-series", 8, 8, build_blorank);
        add("corblo", "Signed table sums rebuild the central sum coefficientwise",
            "signed-table-expansion", 8, 8, build_corblo);
        add("blocoeff", "Product-weighted coefficients match the piecewise formula",
            "piecewise-coefficients", 26, 26, build_blocoeff);
        add("idenp", "Weighted fourth-moment convolution reduces to partition counts",
            "moment-convolution", 15, 15, build_idenp);
        add("th3", "Weighted tail sum equals the signed quotient with divisor weights",
            "weighted-tail-sum", 40, 60, build_th3);
        add("spt-mod", "Inner weighted sum decomposes into eta and theta pieces",
            "modular-decomposition", 40, 60, build_spt_mod);
        add("etatheta", "Fifth-power eta quotient equals a weighted theta series",
            "eta-power-theta", 40, 200, build_etatheta);
        add("qpi", "Bilateral sum equals the five-factor product",
            "quintuple-product", 20, 30, build_qpi);
        add("qpi-half", "Shifted bilateral sum equals the mixed-base product",
            "shifted-quintuple", 25, 30, build_qpi_half);
        add("gordon", "Weighted pentagonal sum equals the cubed product",
            "cubic-theta", 40, 200, build_gordon);
        add("jtp", "Signed square series equals the sign-flip quotient",
            "square-theta", 40, 200, build_jtp);
        add("psi", "Bilateral sum equals the even-base quotient",
            "half-shift-theta", 40, 200, build_psi);
        add("disspar-even", "Even partition slice has an eight-base product form",
            "even-dissection", 30, 100, build_disspar_even);
        add("disspar-odd", "Odd partition slice has an eight-base product form",
            "odd-dissection", 30, 100, build_disspar_odd);
        add("slater-38", "Even-index quadratic-exponent sum and its product forms",
            "slater-even", 25, 100, build_slater_38);
        add("slater-39", "Odd-index quadratic-exponent sum and its product forms",
            "slater-odd", 25, 100, build_slater_39);
        add("claim1", "Distinct-odd counts equal the alternating partition form",
            "selfconj-bridge", 100, 200, build_claim1);
        add("parlemma", "Alternating partition convolution equals a product quotient",
            "convolution-lemma", 40, 200, build_parlemma);
        add("parlemma-odd", "Odd-weight alternating convolution vanishes",
            "odd-convolution", 20, 100, build_parlemma_odd);
        add("sptpn", "Enumerated smallest-part totals match the moment formula",
            "smallest-parts-count", 25, 25, build_sptpn);
        add("diffeuler", "Weighted partition counts equal the divisor-sum quotient",
            "partition-derivative", 40, 200, build_diffeuler);
        add("diffpsc", "Signed weighted distinct-odd counts equal an odd divisor sum",
            "selfconj-derivative", 40, 200, build_diffpsc);
        add("logdiffsp", "Combined divisor sums split across both derivative routes",
            "log-derivative-split", 40, 200, build_logdiffsp);
        add("diffk-lemma", "Higher z-derivatives of wedged series collapse at z = 1",
            "derivative-collapse", 10, 10, build_diffk_lemma);
        add("cong-p-5", "Partition counts vanish mod 5 along 5n+4",
            "partition-congruence-5", 50, 200,
            [](Context& c, int n) { return build_cong_p(c, n, 5, 4); });
        add("cong-p-7", "Partition counts vanish mod 7 along 7n+5",
            "partition-congruence-7", 50, 200,
            [](Context& c, int n) { return build_cong_p(c, n, 7, 5); });
        add("cong-p-11", "Partition counts vanish mod 11 along 11n+6",
            "partition-congruence-11", 50, 200,
            [](Context& c, int n) { return build_cong_p(c, n, 11, 6); });
        add("cong-spt-5", "Smallest-part totals vanish mod 5 along 5n+4",
            "spt-congruence-5", 200, 400,
            [](Context& c, int n) { return build_cong_spt(c, n, 5, 4); });
        add("cong-spt-7", "Smallest-part totals vanish mod 7 along 7n+5",
            "spt-congruence-7", 200, 400,
            [](Context& c, int n) { return build_cong_spt(c, n, 7, 5); });
        add("cong-spt-13", "Smallest-part totals vanish mod 13 along 13n+6",
            "spt-congruence-13", 200, 400,
            [](Context& c, int n) { return build_cong_spt(c, n, 13, 6); });
        add("deri4th", "Fourth derivative of the central sum matches the weighted sum",
            "fourth-derivative-route", 26, 26, build_deri4th);
        return v;
    }();
    return defs;
}

} // namespace qpp
