#include "qpp/rational.hpp"

namespace qpp {

BigRational rat_pow(const BigRational& base, long exp) {
    if (exp == 0) {
        return BigRational(1);
    }
    if (base == 0 && exp < 0) {
        throw DivisionByZeroParameter("rat_pow: zero base with negative exponent");
    }
    bool neg = exp < 0;
    unsigned long e = neg ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    BigRational acc(1);
    BigRational b = base;
    while (e > 0) {
        if (e & 1UL) {
            acc *= b;
        }
        b *= b;
        e >>= 1UL;
    }
    if (neg) {
        acc = BigRational(1) / acc;
    }
    return acc;
}

bool rat_is_integer(const BigRational& r) {
    return denominator(r) == 1;
}

BigInt rat_to_integer(const BigRational& r) {
    if (!rat_is_integer(r)) {
        throw EngineError("rat_to_integer: value " + rat_text(r) + " is not an integer");
    }
    return numerator(r);
}

std::string rat_text(const BigRational& r) {
    if (rat_is_integer(r)) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace qpp
