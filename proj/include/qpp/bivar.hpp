#ifndef QPP_BIVAR_HPP
#define QPP_BIVAR_HPP

/// @file bivar.hpp
/// @brief Truncated series in q whose coefficients are Laurent polynomials in z.

#include <vector>

#include "qpp/laurent.hpp"
#include "qpp/qseries.hpp"

namespace qpp {

class BivarSeries {
public:
    explicit BivarSeries(int order);
    static BivarSeries one(int order);
    static BivarSeries constant(const LaurentPoly& p, int order);
    static BivarSeries from_qseries(const QSeries& s);

    int order() const { return order_; }
    /// Laurent coefficient of q^n; throws OrderExceeded for n > order.
    const LaurentPoly& coeff_poly(int n) const;
    /// Coefficient of z^m q^n (zero when absent); throws OrderExceeded for n > order.
    BigRational coeff(int m, int n) const;
    void set_coeff_poly(int n, const LaurentPoly& p);
    void add_coeff_poly(int n, const LaurentPoly& p);

    BivarSeries operator-() const;
    BivarSeries operator+(const BivarSeries& o) const;
    BivarSeries operator-(const BivarSeries& o) const;
    BivarSeries operator*(const BivarSeries& o) const;

    BivarSeries scaled(const BigRational& c) const;
    /// Multiply every q-coefficient by a fixed Laurent polynomial.
    BivarSeries laurent_scaled(const LaurentPoly& p) const;
    BivarSeries truncated(int new_order) const;
    /// Multiply by q^k (k >= 0).
    BivarSeries shifted(int k) const;

    /// Reciprocal. The q^0 coefficient must be a nonzero monomial c z^e,
    /// otherwise NonUnitConstantTerm is thrown.
    BivarSeries inverted() const;
    BivarSeries divided_by(const BivarSeries& den) const;

    /// Multiply by (1 - c z^e q^k); k = 0 degrades to a Laurent factor.
    BivarSeries mul_binomial(const BigRational& c, int z_e, int k) const;
    /// Divide by (1 - c z^e q^k), k >= 1.
    BivarSeries div_binomial(const BigRational& c, int z_e, int k) const;

    /// Termwise d/dz.
    BivarSeries diff_z() const;
    /// Substitute z := v in every coefficient.
    QSeries eval_z(const BigRational& v) const;

    /// Index of the lowest q-coefficient that is nonzero, or order+1.
    int valuation() const;
    bool is_zero() const;

    bool operator==(const BivarSeries& o) const;
    bool operator!=(const BivarSeries& o) const { return !(*this == o); }

private:
    int order_;
    std::vector<LaurentPoly> c_;
};

} // namespace qpp

#endif
