#ifndef QPP_LAURENT_HPP
#define QPP_LAURENT_HPP

/// @file laurent.hpp
/// @brief Sparse Laurent polynomials in one symbolic variable z.

#include <map>
#include <string>

#include "qpp/rational.hpp"

namespace qpp {

/// A finite map z-exponent -> coefficient, never storing explicit zeros.
/// The zero polynomial is the empty map.
class LaurentPoly {
public:
    using Map = std::map<int, BigRational>;

    LaurentPoly() = default;

    static LaurentPoly constant(const BigRational& c);
    static LaurentPoly monomial(const BigRational& c, int e);

    bool is_zero() const { return terms_.empty(); }
    /// A single stored term (so the polynomial is invertible in the Laurent ring).
    bool is_monomial() const { return terms_.size() == 1; }
    /// Zero or a constant term only.
    bool is_constant() const;

    const Map& terms() const { return terms_; }
    BigRational coeff(int e) const;
    void set_coeff(int e, const BigRational& c);
    void add_term(int e, const BigRational& c);

    int min_exp() const; ///< requires a nonzero polynomial
    int max_exp() const; ///< requires a nonzero polynomial

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);

    LaurentPoly scaled(const BigRational& c) const;
    /// Multiply by z^de.
    LaurentPoly shifted(int de) const;
    /// d/dz, termwise power rule (negative exponents included).
    LaurentPoly diff() const;
    /// Substitute z := v. Throws ZeroSubstitutionWithNegativeExponent when
    /// v = 0 meets a negative exponent.
    BigRational eval(const BigRational& v) const;
    /// Substitute z := z^k for nonzero k (k may be negative).
    LaurentPoly subst_pow(int k) const;

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return terms_ != o.terms_; }

    std::string text() const;

private:
    Map terms_;
};

} // namespace qpp

#endif
