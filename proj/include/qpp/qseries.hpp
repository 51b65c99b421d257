#ifndef QPP_QSERIES_HPP
#define QPP_QSERIES_HPP

/// @file qseries.hpp
/// @brief Truncated formal power series in q over exact rationals.
///
/// A series of order N stores the coefficients of q^0..q^N inclusive.
/// Arithmetic between operands of unequal order truncates to the smaller
/// order, so pipelines compose without explicit bookkeeping.

#include <vector>

#include "qpp/rational.hpp"

namespace qpp {

class QSeries {
public:
    explicit QSeries(int order);
    static QSeries one(int order);
    static QSeries constant(const BigRational& v, int order);

    int order() const { return order_; }
    /// Coefficient of q^n; throws OrderExceeded for n > order.
    const BigRational& coeff(int n) const;
    void set_coeff(int n, const BigRational& v);
    void add_coeff(int n, const BigRational& v);

    QSeries operator-() const;
    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;

    QSeries scaled(const BigRational& c) const;
    QSeries truncated(int new_order) const;
    /// Multiply by q^k (k >= 0), dropping overflowed coefficients.
    QSeries shifted(int k) const;

    /// Reciprocal by forward substitution. Throws NonUnitConstantTerm when
    /// the q^0 coefficient is zero.
    QSeries inverted() const;
    QSeries divided_by(const QSeries& den) const;

    /// Multiply by the binomial (1 - c q^k). k = 0 is a plain scalar factor.
    QSeries mul_binomial(const BigRational& c, int k) const;
    /// Divide by (1 - c q^k) with k >= 1, the exact geometric-series recurrence.
    QSeries div_binomial(const BigRational& c, int k) const;

    /// The theta operator q d/dq: coefficient n maps to n times itself.
    QSeries q_derivative() const;

    /// Index of the lowest nonzero coefficient, or order+1 when zero.
    int valuation() const;
    bool is_zero() const;

    bool operator==(const QSeries& o) const;
    bool operator!=(const QSeries& o) const { return !(*this == o); }

private:
    int order_;
    std::vector<BigRational> c_;
};

} // namespace qpp

#endif
