#ifndef QPP_RATIONAL_HPP
#define QPP_RATIONAL_HPP

/// @file rational.hpp
/// @brief Exact arbitrary-precision integers and rationals.
///
/// Rationals are kept in canonical form by the backing type: reduced,
/// denominator positive, zero stored as 0/1.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "qpp/errors.hpp"

namespace qpp {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// base^exp with exact rational arithmetic; exp may be negative.
/// Throws DivisionByZeroParameter for 0 raised to a negative power.
BigRational rat_pow(const BigRational& base, long exp);

/// True when the denominator is 1.
bool rat_is_integer(const BigRational& r);

/// Unwrap an integer-valued rational; throws EngineError otherwise.
BigInt rat_to_integer(const BigRational& r);

/// "p/q", or just "p" when the denominator is 1.
std::string rat_text(const BigRational& r);

/// (-1)^k for any signed integer k.
inline int parity_sign(long long k) {
    return (k % 2 == 0) ? 1 : -1;
}

} // namespace qpp

#endif
