#ifndef QPP_FRAC_QSERIES_HPP
#define QPP_FRAC_QSERIES_HPP

/// @file frac_qseries.hpp
/// @brief q-series carrying a global fractional power prefactor q^offset.

#include "qpp/qseries.hpp"
#include "qpp/rational.hpp"

namespace qpp {

/// Represents q^offset * body where the offset denominator divides 24.
class FracQSeries {
public:
    FracQSeries(const BigRational& offset, QSeries body);

    const BigRational& offset() const { return offset_; }
    const QSeries& body() const { return body_; }

    /// Offsets add, bodies multiply.
    FracQSeries frac_mul(const FracQSeries& o) const;
    /// Offsets subtract, bodies divide.
    FracQSeries frac_div(const FracQSeries& o) const;
    FracQSeries scaled(const BigRational& c) const;

    /// Requires offset == 0 and hands back the plain body.
    const QSeries& assert_integral() const;

private:
    BigRational offset_;
    QSeries body_;
};

} // namespace qpp

#endif
