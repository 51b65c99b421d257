#include "qpp/bivar.hpp"

#include <algorithm>

#include "qpp/errors.hpp"

namespace qpp {

BivarSeries::BivarSeries(int order) : order_(order) {
    if (order < 0) {
        throw EngineError("BivarSeries: negative order");
    }
    c_.resize(static_cast<std::size_t>(order) + 1);
}

BivarSeries BivarSeries::one(int order) {
    BivarSeries s(order);
    s.c_[0] = LaurentPoly::constant(BigRational(1));
    return s;
}

BivarSeries BivarSeries::constant(const LaurentPoly& p, int order) {
    BivarSeries s(order);
    s.c_[0] = p;
    return s;
}

BivarSeries BivarSeries::from_qseries(const QSeries& s) {
    BivarSeries r(s.order());
    for (int n = 0; n <= s.order(); ++n) {
        if (s.coeff(n) != 0) {
            r.c_[static_cast<std::size_t>(n)] = LaurentPoly::constant(s.coeff(n));
        }
    }
    return r;
}

const LaurentPoly& BivarSeries::coeff_poly(int n) const {
    if (n < 0 || n > order_) {
        throw OrderExceeded("BivarSeries::coeff_poly: index out of range");
    }
    return c_[static_cast<std::size_t>(n)];
}

BigRational BivarSeries::coeff(int m, int n) const {
    return coeff_poly(n).coeff(m);
}

void BivarSeries::set_coeff_poly(int n, const LaurentPoly& p) {
    if (n < 0 || n > order_) {
        throw OrderExceeded("BivarSeries::set_coeff_poly: index out of range");
    }
    c_[static_cast<std::size_t>(n)] = p;
}

void BivarSeries::add_coeff_poly(int n, const LaurentPoly& p) {
    if (n < 0 || n > order_) {
        throw OrderExceeded("BivarSeries::add_coeff_poly: index out of range");
    }
    c_[static_cast<std::size_t>(n)] += p;
}

BivarSeries BivarSeries::operator-() const {
    BivarSeries r(order_);
    for (int n = 0; n <= order_; ++n) {
        r.c_[static_cast<std::size_t>(n)] = -c_[static_cast<std::size_t>(n)];
    }
    return r;
}

BivarSeries BivarSeries::operator+(const BivarSeries& o) const {
    int ord = std::min(order_, o.order_);
    BivarSeries r(ord);
    for (int n = 0; n <= ord; ++n) {
        r.c_[static_cast<std::size_t>(n)] =
            c_[static_cast<std::size_t>(n)] + o.c_[static_cast<std::size_t>(n)];
    }
    return r;
}

BivarSeries BivarSeries::operator-(const BivarSeries& o) const {
    int ord = std::min(order_, o.order_);
    BivarSeries r(ord);
    for (int n = 0; n <= ord; ++n) {
        r.c_[static_cast<std::size_t>(n)] =
            c_[static_cast<std::size_t>(n)] - o.c_[static_cast<std::size_t>(n)];
    }
    return r;
}

BivarSeries BivarSeries::operator*(const BivarSeries& o) const {
    int ord = std::min(order_, o.order_);
    BivarSeries r(ord);
    for (int i = 0; i <= ord; ++i) {
        const LaurentPoly& a = c_[static_cast<std::size_t>(i)];
        if (a.is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= ord; ++j) {
            const LaurentPoly& b = o.c_[static_cast<std::size_t>(j)];
            if (b.is_zero()) {
                continue;
            }
            r.c_[static_cast<std::size_t>(i + j)] += a * b;
        }
    }
    return r;
}

BivarSeries BivarSeries::scaled(const BigRational& c) const {
    BivarSeries r(order_);
    for (int n = 0; n <= order_; ++n) {
        r.c_[static_cast<std::size_t>(n)] = c_[static_cast<std::size_t>(n)].scaled(c);
    }
    return r;
}

BivarSeries BivarSeries::laurent_scaled(const LaurentPoly& p) const {
    BivarSeries r(order_);
    for (int n = 0; n <= order_; ++n) {
        r.c_[static_cast<std::size_t>(n)] = c_[static_cast<std::size_t>(n)] * p;
    }
    return r;
}

BivarSeries BivarSeries::truncated(int new_order) const {
    if (new_order > order_) {
        throw OrderExceeded("BivarSeries::truncated: cannot extend");
    }
    BivarSeries r(new_order);
    for (int n = 0; n <= new_order; ++n) {
        r.c_[static_cast<std::size_t>(n)] = c_[static_cast<std::size_t>(n)];
    }
    return r;
}

BivarSeries BivarSeries::shifted(int k) const {
    if (k < 0) {
        throw EngineError("BivarSeries::shifted: negative shift");
    }
    BivarSeries r(order_);
    for (int n = order_; n >= k; --n) {
        r.c_[static_cast<std::size_t>(n)] = c_[static_cast<std::size_t>(n - k)];
    }
    return r;
}

BivarSeries BivarSeries::inverted() const {
    const LaurentPoly& a0 = c_[0];
    if (!a0.is_monomial()) {
        throw NonUnitConstantTerm(
            "BivarSeries::inverted: q^0 coefficient must be a single nonzero monomial");
    }
    int e = a0.min_exp();
    BigRational c = a0.coeff(e);
    LaurentPoly inv0 = LaurentPoly::monomial(BigRational(1) / c, -e);
    BivarSeries r(order_);
    r.c_[0] = inv0;
    for (int n = 1; n <= order_; ++n) {
        LaurentPoly acc;
        for (int i = 1; i <= n; ++i) {
            const LaurentPoly& ai = c_[static_cast<std::size_t>(i)];
            if (ai.is_zero()) {
                continue;
            }
            acc += ai * r.c_[static_cast<std::size_t>(n - i)];
        }
        if (!acc.is_zero()) {
            r.c_[static_cast<std::size_t>(n)] = -(inv0 * acc);
        }
    }
    return r;
}

BivarSeries BivarSeries::divided_by(const BivarSeries& den) const {
    int ord = std::min(order_, den.order_);
    const LaurentPoly& b0 = den.c_[0];
    if (!b0.is_monomial()) {
        throw NonUnitConstantTerm(
            "BivarSeries::divided_by: denominator q^0 coefficient must be a single nonzero monomial");
    }
    int e = b0.min_exp();
    BigRational c = b0.coeff(e);
    LaurentPoly inv0 = LaurentPoly::monomial(BigRational(1) / c, -e);
    BivarSeries r(ord);
    for (int n = 0; n <= ord; ++n) {
        LaurentPoly acc = c_[static_cast<std::size_t>(n)];
        for (int i = 1; i <= n; ++i) {
            const LaurentPoly& bi = den.c_[static_cast<std::size_t>(i)];
            if (bi.is_zero()) {
                continue;
            }
            acc -= bi * r.c_[static_cast<std::size_t>(n - i)];
        }
        if (!acc.is_zero()) {
            r.c_[static_cast<std::size_t>(n)] = inv0 * acc;
        }
    }
    return r;
}

BivarSeries BivarSeries::mul_binomial(const BigRational& c, int z_e, int k) const {
    if (k < 0) {
        throw EngineError("BivarSeries::mul_binomial: negative q-power");
    }
    if (c == 0) {
        return *this;
    }
    if (k == 0) {
        LaurentPoly factor = LaurentPoly::constant(BigRational(1));
        factor += LaurentPoly::monomial(-c, z_e);
        return laurent_scaled(factor);
    }
    BivarSeries r = *this;
    for (int n = order_; n >= k; --n) {
        const LaurentPoly& src = c_[static_cast<std::size_t>(n - k)];
        if (src.is_zero()) {
            continue;
        }
        r.c_[static_cast<std::size_t>(n)] -= src.shifted(z_e).scaled(c);
    }
    return r;
}

BivarSeries BivarSeries::div_binomial(const BigRational& c, int z_e, int k) const {
    if (k < 1) {
        throw NonUnitConstantTerm(
            "BivarSeries::div_binomial: q-power must be positive");
    }
    BivarSeries r = *this;
    if (c == 0) {
        return r;
    }
    for (int n = k; n <= order_; ++n) {
        const LaurentPoly& src = r.c_[static_cast<std::size_t>(n - k)];
        if (src.is_zero()) {
            continue;
        }
        r.c_[static_cast<std::size_t>(n)] += src.shifted(z_e).scaled(c);
    }
    return r;
}

BivarSeries BivarSeries::diff_z() const {
    BivarSeries r(order_);
    for (int n = 0; n <= order_; ++n) {
        r.c_[static_cast<std::size_t>(n)] = c_[static_cast<std::size_t>(n)].diff();
    }
    return r;
}

QSeries BivarSeries::eval_z(const BigRational& v) const {
    QSeries r(order_);
    for (int n = 0; n <= order_; ++n) {
        r.set_coeff(n, c_[static_cast<std::size_t>(n)].eval(v));
    }
    return r;
}

int BivarSeries::valuation() const {
    for (int n = 0; n <= order_; ++n) {
        if (!c_[static_cast<std::size_t>(n)].is_zero()) {
            return n;
        }
    }
    return order_ + 1;
}

bool BivarSeries::is_zero() const {
    return valuation() > order_;
}

bool BivarSeries::operator==(const BivarSeries& o) const {
    if (order_ != o.order_) {
        return false;
    }
    for (int n = 0; n <= order_; ++n) {
        if (c_[static_cast<std::size_t>(n)] != o.c_[static_cast<std::size_t>(n)]) {
            return false;
        }
    }
    return true;
}

} // namespace qpp
