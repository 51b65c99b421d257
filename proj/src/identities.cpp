#include "qpp/identities.hpp"

#include <algorithm>
#include <chrono>

#include "qpp/errors.hpp"
#include "qpp/partitions.hpp"
#include "qpp/pochhammer.hpp"

namespace qpp {

const QSeries& Context::euler(int order) {
    if (!euler_ || euler_->order() < order) {
        euler_ = euler_series(order);
    }
    return *euler_;
}

const BivarSeries& Context::s_series(int order) {
    if (!s_ || s_->order() < order) {
        BivarSeries term = BivarSeries::one(order);
        BivarSeries acc = term;
        for (int n = 1; n <= order; ++n) {
            term = term.mul_binomial(BigRational(1), 2, n - 1)
                       .mul_binomial(BigRational(1), -2, n - 1)
                       .shifted(1)
                       .div_binomial(BigRational(-1), 1, n)
                       .div_binomial(BigRational(-1), -1, n);
            acc = acc + term;
        }
        s_ = acc;
    }
    return *s_;
}

const NTable& Context::table(int max_n) {
    if (!table_ || table_->max_n < max_n) {
        table_ = build_ntable(std::max(max_n, 15));
    }
    return *table_;
}

BigInt Context::partition_at(int n) {
    if (n < 0) {
        return BigInt(0);
    }
    if (static_cast<int>(partitions_.size()) <= n) {
        partitions_ = partition_vector(std::max(2 * n, 256));
    }
    return partitions_[static_cast<std::size_t>(n)];
}

const QSeries& Context::spt(int order) {
    if (!spt_ || spt_->order() < order) {
        spt_ = spt_series(order);
    }
    return *spt_;
}

namespace {

std::optional<Mismatch> first_poly_mismatch(const LaurentPoly& a, const LaurentPoly& b,
                                            int n, bool univariate) {
    if (a == b) {
        return std::nullopt;
    }
    int lo = 0;
    int hi = 0;
    bool any = false;
    for (const LaurentPoly* p : {&a, &b}) {
        if (!p->is_zero()) {
            lo = any ? std::min(lo, p->min_exp()) : p->min_exp();
            hi = any ? std::max(hi, p->max_exp()) : p->max_exp();
            any = true;
        }
    }
    for (int m = lo; m <= hi; ++m) {
        BigRational va = a.coeff(m);
        BigRational vb = b.coeff(m);
        if (va != vb) {
            Mismatch mm;
            if (!univariate) {
                mm.m = m;
            }
            mm.n = n;
            mm.lhs = va;
            mm.rhs = vb;
            return mm;
        }
    }
    return std::nullopt;
}

std::optional<Mismatch> first_unit_mismatch(const ComparisonUnit& u, int eff) {
    int n_max = std::min({u.lhs.order(), u.rhs.order(), eff});
    for (int n = 0; n <= n_max; ++n) {
        auto mm = first_poly_mismatch(u.lhs.coeff_poly(n), u.rhs.coeff_poly(n), n,
                                      u.univariate);
        if (mm) {
            return mm;
        }
    }
    return std::nullopt;
}

IdentityReport run_units(const CheckDef& def, std::vector<ComparisonUnit> units,
                         int eff, std::chrono::steady_clock::time_point start) {
    IdentityReport rep;
    rep.id = def.id;
    rep.order_checked = eff;
    rep.pass = true;
    for (const ComparisonUnit& u : units) {
        auto mm = first_unit_mismatch(u, eff);
        if (mm) {
            rep.pass = false;
            rep.first_mismatch = *mm;
            break;
        }
    }
    auto stop = std::chrono::steady_clock::now();
    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return rep;
}

} // namespace

const CheckDef& find_check(const std::string& id) {
    for (const CheckDef& def : registry()) {
        if (def.id == id) {
            return def;
        }
    }
    throw UnknownCheckId("no check is registered under id '" + id + "'");
}

IdentityReport run_check(Context& ctx, const CheckDef& def, int order) {
    auto start = std::chrono::steady_clock::now();
    int eff = std::min(order, def.cap);
    return run_units(def, def.build(ctx, eff), eff, start);
}

IdentityReport run_check(const std::string& id, int order) {
    Context ctx;
    return run_check(ctx, find_check(id), order);
}

std::vector<IdentityReport> run_all(int order) {
    Context ctx;
    std::vector<IdentityReport> out;
    out.reserve(registry().size());
    for (const CheckDef& def : registry()) {
        out.push_back(run_check(ctx, def, order));
    }
    return out;
}

IdentityReport run_check_with_fault(const std::string& id, int order,
                                    bool perturb_lhs, int m, int n,
                                    const BigRational& delta) {
    const CheckDef& def = find_check(id);
    Context ctx;
    auto start = std::chrono::steady_clock::now();
    int eff = std::min(order, def.cap);
    std::vector<ComparisonUnit> units = def.build(ctx, eff);
    if (units.empty()) {
        throw EngineError("check '" + id + "' produced no comparison units");
    }
    BivarSeries& side = perturb_lhs ? units.front().lhs : units.front().rhs;
    if (n < 0 || n > side.order()) {
        throw OrderExceeded("fault position is outside the computed order");
    }
    LaurentPoly poly = side.coeff_poly(n);
    poly.set_coeff(m, poly.coeff(m) + delta);
    side.set_coeff_poly(n, poly);
    return run_units(def, std::move(units), eff, start);
}

} // namespace qpp
