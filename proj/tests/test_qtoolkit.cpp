#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qpp/errors.hpp"
#include "qpp/partitions.hpp"
#include "qpp/pochhammer.hpp"
#include "qpp/rational.hpp"

using namespace qpp;

namespace {

using R = BigRational;

long long sigma(int n) {
    long long s = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d == 0) s += d;
    }
    return s;
}

long long sigma_odd(int n) {
    long long s = 0;
    for (int d = 1; d <= n; d += 2) {
        if (n % d == 0) s += d;
    }
    return s;
}

} // namespace

TEST_CASE("finite Pochhammer expands the three-factor product") {
    QSeries p = qs_poch_finite(R(1), 1, 1, 3, 10);
    QSeries expect(10);
    expect.set_coeff(0, R(1));
    expect.set_coeff(1, R(-1));
    expect.set_coeff(2, R(-1));
    expect.set_coeff(4, R(1));
    expect.set_coeff(5, R(1));
    expect.set_coeff(6, R(-1));
    CHECK(p == expect);

    BivarSeries b = poch_finite(Monomial{R(1), 0, 1, 1}, 3, 10);
    CHECK(b == BivarSeries::from_qseries(expect));

    CHECK(qs_poch_finite(R(1), 1, 1, 0, 5) == QSeries::one(5));
    CHECK(poch_finite(Monomial{R(1), 1, 1, 1}, 0, 5) == BivarSeries::one(5));
}

TEST_CASE("Euler product has pentagonal-number support with alternating signs") {
    QSeries e = euler_series(60);
    for (int n = 0; n <= 60; ++n) {
        auto idx = is_pentagonal(n);
        R expect = idx ? R(parity_sign(*idx)) : R(0);
        CHECK(e.coeff(n) == expect);
    }
}

TEST_CASE("partition generating function inverts the Euler product") {
    int order = 50;
    CHECK(euler_inverse(order) * euler_series(order) == QSeries::one(order));
    auto pv = partition_vector(order);
    QSeries inv = euler_inverse(order);
    for (int n = 0; n <= order; ++n) {
        CHECK(inv.coeff(n) == R(pv[static_cast<size_t>(n)]));
    }
}

TEST_CASE("bilateral theta sum matches its five-factor product form") {
    int order = 25;
    BivarSeries lhs = quintuple_lhs(order);

    LaurentPoly front;
    front.add_term(0, R(1));
    front.add_term(-1, R(-1));
    ProductSpec spec;
    spec.factors.push_back({Monomial{R(1), 0, 1, 1}, 1});
    spec.factors.push_back({Monomial{R(1), 1, 1, 1}, 1});
    spec.factors.push_back({Monomial{R(1), -1, 1, 1}, 1});
    spec.factors.push_back({Monomial{R(1), 2, 1, 2}, 1});
    spec.factors.push_back({Monomial{R(1), -2, 1, 2}, 1});
    BivarSeries rhs = product(spec, order) * BivarSeries::constant(front, order);
    CHECK(lhs == rhs);

    LaurentPoly q0;
    q0.add_term(0, R(1));
    q0.add_term(-1, R(-1));
    CHECK(lhs.coeff_poly(0) == q0);
    LaurentPoly q1;
    q1.add_term(-3, R(1));
    q1.add_term(2, R(-1));
    CHECK(lhs.coeff_poly(1) == q1);
}

TEST_CASE("weight-3/2 bilateral sum equals a cube times a square") {
    int order = 40;
    QSeries g = gordon_series(order);
    CHECK(g.coeff(0) == R(1));
    CHECK(g.coeff(1) == R(-5));
    QSeries e = euler_series(order);
    QSeries h = qs_poch_infinite(R(1), 1, 2, order);
    CHECK(g == e * e * e * h * h);
}

TEST_CASE("odd-exponent bilateral sum equals its product form") {
    int order = 40;
    QSeries even = qs_poch_infinite(R(1), 2, 2, order);
    QSeries odd = qs_poch_infinite(R(1), 1, 2, order);
    CHECK(psi_series(order) == even.divided_by(odd));
}

TEST_CASE("signed square sum equals the Euler-to-binomial quotient") {
    int order = 40;
    QSeries lhs = jtp_square_series(order);
    QSeries rhs = euler_series(order).divided_by(qs_poch_infinite(R(-1), 1, 1, order));
    CHECK(lhs == rhs);
    CHECK(lhs.coeff(0) == R(1));
    CHECK(lhs.coeff(1) == R(-2));
    CHECK(lhs.coeff(4) == R(2));
    CHECK(lhs.coeff(9) == R(-2));
    CHECK(lhs.coeff(5) == R(0));
}

TEST_CASE("product and quotient builds of the central series coincide") {
    int order = 20;
    ProductSpec prod;
    prod.factors.push_back({Monomial{R(1), 1, 1, 1}, 1});
    prod.factors.push_back({Monomial{R(1), -1, 1, 1}, 1});
    prod.factors.push_back({Monomial{R(1), 2, 1, 2}, 1});
    prod.factors.push_back({Monomial{R(1), -2, 1, 2}, 1});
    BivarSeries a = product(prod, order);

    ProductSpec quot;
    quot.factors.push_back({Monomial{R(1), 2, 1, 1}, 1});
    quot.factors.push_back({Monomial{R(1), -2, 1, 1}, 1});
    quot.factors.push_back({Monomial{R(-1), 1, 1, 1}, -1});
    quot.factors.push_back({Monomial{R(-1), -1, 1, 1}, -1});
    BivarSeries b = product(quot, order);
    CHECK(a == b);

    QSeries at_one = euler_series(order) * euler_series(order) *
                     qs_poch_infinite(R(1), 1, 2, order) *
                     qs_poch_infinite(R(1), 1, 2, order);
    CHECK(a.eval_z(R(1)) == at_one);
}

TEST_CASE("Lambert series carry divisor sums as coefficients") {
    int order = 30;
    QSeries all = lambert_all(order);
    QSeries odd = lambert_odd(order);
    QSeries even = lambert_even(order);
    CHECK(all.coeff(0) == R(0));
    for (int n = 1; n <= order; ++n) {
        CHECK(all.coeff(n) == R(sigma(n)));
        CHECK(odd.coeff(n) == R(sigma_odd(n)));
        R even_expect = (n % 2 == 0) ? R(sigma(n / 2)) : R(0);
        CHECK(even.coeff(n) == even_expect);
    }
    CHECK(all == odd + even.scaled(R(2)));
    CHECK(all.coeff(6) == R(12));
    CHECK(odd.coeff(6) == R(4));
    CHECK(even.coeff(6) == R(4));
}

TEST_CASE("logarithmic q-derivative of the Euler product is a Lambert series") {
    int order = 30;
    QSeries e = euler_series(order);
    CHECK(e.q_derivative() == (e * lambert_all(order)).scaled(R(-1)));
}

TEST_CASE("eta quotients track fractional exponent offsets") {
    FracQSeries plain = eta_quotient({{1, 1}}, 12);
    CHECK(plain.offset() == R(1, 24));
    CHECK(plain.body() == euler_series(12));
    CHECK_THROWS_AS(plain.assert_integral(), NonIntegralOffset);

    FracQSeries balanced = eta_quotient({{1, 4}, {2, -2}}, 8);
    CHECK(balanced.offset() == R(0));
    QSeries body = balanced.assert_integral();
    long long expect[] = {1, -4, 4, 0, 4, -8, 0, 0, 4};
    for (int n = 0; n <= 8; ++n) {
        CHECK(body.coeff(n) == R(expect[n]));
    }

    FracQSeries ratio = eta_quotient({{2, 12}}, 6).frac_div(eta_quotient({{1, 12}}, 6));
    CHECK(ratio.offset() == R(1, 2));
}

TEST_CASE("the mod-12 character and cubic theta body are frozen") {
    CHECK(chi12(1) == 1);
    CHECK(chi12(5) == -1);
    CHECK(chi12(3) == 0);
    CHECK(chi12(7) == 1);
    CHECK(chi12(11) == -1);
    CHECK(chi12(6) == 0);
    CHECK(chi12(25) == 1);

    FracQSeries theta = theta_shimura(7);
    CHECK(theta.offset() == R(1, 24));
    long long expect[] = {1, -125, 343, 0, 0, -1331, 0, 2197};
    for (int n = 0; n <= 7; ++n) {
        CHECK(theta.body().coeff(n) == R(expect[n]));
    }
}

TEST_CASE("odd-step binomial product counts self-conjugate partitions") {
    int order = 20;
    QSeries distinct_odd = qs_poch_infinite(R(-1), 1, 2, order);
    for (int n = 0; n <= order; ++n) {
        CHECK(distinct_odd.coeff(n) == R(selfconj_count(n)));
    }
}

TEST_CASE("sum drivers accumulate terms and police valuations") {
    int order = 12;
    QSeries geometric = sum_qseries_terms(
        [order](int n) {
            QSeries t(order);
            t.set_coeff(n, R(1));
            return t;
        },
        order);
    QSeries ones(order);
    for (int n = 0; n <= order; ++n) ones.set_coeff(n, R(1));
    CHECK(geometric == ones);

    CHECK_THROWS_AS(sum_qseries_terms([order](int) { return QSeries::one(order); }, order),
                    ValuationViolation);
    CHECK_THROWS_AS(sum_qseries_terms([](int) { return QSeries::one(3); }, 8),
                    EngineError);

    BivarSeries z_line = sum_bivariate_terms(
        [order](int n) {
            BivarSeries t(order);
            t.set_coeff_poly(n, LaurentPoly::monomial(R(1), n));
            return t;
        },
        order);
    for (int n = 0; n <= order; ++n) {
        CHECK(z_line.coeff_poly(n) == LaurentPoly::monomial(R(1), n));
    }
    CHECK_THROWS_AS(
        sum_bivariate_terms([order](int) { return BivarSeries::one(order); }, order),
        ValuationViolation);
}

TEST_CASE("infinite products reject factors that start at the constant term") {
    CHECK_THROWS_AS(poch_infinite(Monomial{R(1), 0, 0, 1}, 5), DivergentFormalProduct);
    CHECK_THROWS_AS(qs_poch_infinite(R(1), 0, 1, 5), DivergentFormalProduct);
    ProductSpec spec;
    spec.factors.push_back({Monomial{R(1), 1, 0, 1}, 1});
    CHECK_THROWS_AS(product(spec, 5), DivergentFormalProduct);
}
