#ifndef QPP_POCHHAMMER_HPP
#define QPP_POCHHAMMER_HPP

/// @file pochhammer.hpp
/// @brief Pochhammer products, theta-style sums, Lambert series and eta quotients.

#include <functional>
#include <utility>
#include <vector>

#include "qpp/bivar.hpp"
#include "qpp/frac_qseries.hpp"
#include "qpp/qseries.hpp"
#include "qpp/rational.hpp"

namespace qpp {

/// Argument of a Pochhammer symbol: scalar * z^z_exp * q^q_exp over the base q^q_step.
struct Monomial {
    BigRational scalar;
    int z_exp = 0;
    int q_exp = 0;
    int q_step = 1;
};

/// A product of infinite Pochhammer symbols with signed multiplicities.
struct ProductSpec {
    std::vector<std::pair<Monomial, int>> factors;
};

/// prod_{j=1..n} (1 - scalar z^z_exp q^{q_exp + (j-1) q_step}), truncated.
BivarSeries poch_finite(const Monomial& a, int n, int order);

/// prod_{j>=0} (1 - scalar z^z_exp q^{q_exp + j q_step}); requires q_exp >= 1.
BivarSeries poch_infinite(const Monomial& a, int order);

/// Multiplies and divides the listed infinite products per their multiplicities.
BivarSeries product(const ProductSpec& spec, int order);

/// Univariate finite Pochhammer prod_{j=1..n} (1 - c q^{q_exp + (j-1) q_step}).
QSeries qs_poch_finite(const BigRational& c, int q_exp, int q_step, int n, int order);

/// Univariate infinite Pochhammer; requires q_exp >= 1.
QSeries qs_poch_infinite(const BigRational& c, int q_exp, int q_step, int order);

/// (q;q)_infinity.
QSeries euler_series(int order);
/// 1/(q;q)_infinity, the partition generating function.
QSeries euler_inverse(int order);

/// sum_{n>=1} n q^n/(1-q^n).
QSeries lambert_all(int order);
/// Same sum restricted to odd n.
QSeries lambert_odd(int order);
/// sum_{n>=1} n q^{2n}/(1-q^{2n}).
QSeries lambert_even(int order);

/// Bilateral sum q^{(3n^2+n)/2} (z^{3n} - z^{-3n-1}) over all integers n.
BivarSeries quintuple_lhs(int order);

/// Bilateral sum (6n+1) q^{(3n^2+n)/2} over all integers n.
QSeries gordon_series(int order);
/// 1 + 2 sum_{j>=1} (-1)^j q^{j^2}.
QSeries jtp_square_series(int order);
/// Bilateral sum q^{2n^2-n} over all integers n.
QSeries psi_series(int order);

/// Product over (d, e) of (q^d; q^d)_infinity^e with global offset sum(e d)/24.
FracQSeries eta_quotient(const std::vector<std::pair<int, int>>& spec, int order);

/// Character modulo 12 used by the weight-3/2 theta sum: 1 at 1 mod 6, -1 at 5 mod 6.
int chi12(long long n);

/// Offset 1/24 and body sum_{n>=1} chi12(n) n^3 q^{(n^2-1)/24}.
FracQSeries theta_shimura(int order);

/// Sums term(n) for n = 0..order; each term must have q-valuation >= n.
BivarSeries sum_bivariate_terms(const std::function<BivarSeries(int)>& term, int order);
/// Univariate variant of the same driver.
QSeries sum_qseries_terms(const std::function<QSeries(int)>& term, int order);

} // namespace qpp

#endif
