#include "qpp/frac_qseries.hpp"

#include "qpp/errors.hpp"

namespace qpp {

namespace {

void validate_offset(const BigRational& offset) {
    BigInt den = denominator(offset);
    if (den <= 0 || 24 % den != 0) {
        throw NonIntegralOffset(
            "FracQSeries: offset denominator must divide 24, got " + rat_text(offset));
    }
}

} // namespace

FracQSeries::FracQSeries(const BigRational& offset, QSeries body)
    : offset_(offset), body_(std::move(body)) {
    validate_offset(offset_);
}

FracQSeries FracQSeries::frac_mul(const FracQSeries& o) const {
    return FracQSeries(offset_ + o.offset_, body_ * o.body_);
}

FracQSeries FracQSeries::frac_div(const FracQSeries& o) const {
    return FracQSeries(offset_ - o.offset_, body_.divided_by(o.body_));
}

FracQSeries FracQSeries::scaled(const BigRational& c) const {
    return FracQSeries(offset_, body_.scaled(c));
}

const QSeries& FracQSeries::assert_integral() const {
    if (offset_ != 0) {
        throw NonIntegralOffset(
            "FracQSeries::assert_integral: residual offset " + rat_text(offset_));
    }
    return body_;
}

} // namespace qpp
