#ifndef QPP_OVERPARTITIONS_HPP
#define QPP_OVERPARTITIONS_HPP

/// @file overpartitions.hpp
/// @brief Overpartition pairs, their (r, s, rank) statistics, the four-index
/// counting table and the finite coefficient formulas built on it.

#include <array>
#include <map>
#include <set>
#include <vector>

#include "qpp/bivar.hpp"
#include "qpp/rational.hpp"

namespace qpp {

/// Partition in which each distinct part value may carry one overline.
struct Overpartition {
    std::vector<int> parts;     // non-increasing
    std::set<int> overlined;    // subset of the distinct part values
};

struct OverpartitionPair {
    Overpartition lambda;
    Overpartition mu;
};

/// Statistics read off one pair: r counts overlined parts of lambda plus
/// non-overlined parts of mu, s counts all parts of mu.
struct PairStats {
    int r = 0;
    int s = 0;
    int rank = 0;
};

/// Sparse table of counts indexed by (r, s, m, n); keys are stored as
/// {n, r, s, m} so one weight can be scanned as a contiguous range.
struct NTable {
    int max_n = 0;
    std::map<std::array<int, 4>, long long> counts;

    /// Count at (r, s, m, n); zero when absent, TableTooSmall when n > max_n.
    long long at(int r, int s, int m, int n) const;
};

std::vector<Overpartition> enumerate_overpartitions(int n);
std::vector<OverpartitionPair> enumerate_pairs(int n);

/// (r, s, rank) of a pair; the empty pair gets r = s = rank = 0.
PairStats pair_stats(const OverpartitionPair& p);

/// Builds the counting table for all weights up to max_n.
NTable build_ntable(int max_n);

/// The two-parameter rank series at rational d, e with symbolic z.
BivarSeries blorank_series(const BigRational& d, const BigRational& e, int order);

/// Alternating multi-sum over the table and pentagonal shifts predicting the
/// coefficient of z^m q^n in the Euler-product-weighted rank series.
BigInt blocoeff_multisum(int m, int n, const NTable& table);

/// Left and right sides of the finite convolution identity expressing a
/// weighted fourth-moment sum through plain partition counts.
BigInt idenp_lhs(int n, const NTable& table);
BigInt idenp_rhs(int n);

} // namespace qpp

#endif
