#ifndef QPP_CHEBYSHEV_HPP
#define QPP_CHEBYSHEV_HPP

/// @file chebyshev.hpp
/// @brief Second-kind Chebyshev values, their period-6 specialization at 1/2,
/// and the piecewise coefficient formula driven by pentagonal indices.

#include <string>

#include "qpp/rational.hpp"

namespace qpp {

/// U_n(x) for any integer n: three-term recurrence upward, with U_{-1} = 0
/// and U_{-n} = -U_{n-2} downward.
BigRational u_poly(long long n, const BigRational& x);

/// U_n(1/2) via the period-6 value table, valid for every integer n.
int u_half(long long n);

/// Confirms (sum_{m=0..M} U_m(1/2) z^m)(1 - z + z^2) = 1 up to z-degree M.
bool genfun_check(int M);

/// Which of the two piecewise systems applies: the branch for non-negative
/// pentagonal indices or the primed branch for negative ones.
enum class Branch { Plain, Primed };

struct IntervalCase {
    Branch branch = Branch::Plain;
    int case_id = 1;            // 1..6
    std::string text() const;   // "I2", "I5'", ...
};

/// Locates m within the six-interval decomposition attached to the
/// pentagonal number n of index ell; NotPentagonal if they disagree.
IntervalCase classify(int m, int n, int ell);

/// Coefficient of z^m q^n in the Euler-product-weighted rank series,
/// evaluated from the closed piecewise formula; zero off the pentagonal grid.
long long piecewise_coeff(int m, int n);

} // namespace qpp

#endif
