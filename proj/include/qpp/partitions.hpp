#ifndef QPP_PARTITIONS_HPP
#define QPP_PARTITIONS_HPP

/// @file partitions.hpp
/// @brief Partition counting, enumeration oracles and pentagonal-number helpers.

#include <optional>
#include <vector>

#include "qpp/qseries.hpp"
#include "qpp/rational.hpp"

namespace qpp {

/// A generalized pentagonal number (3 ell^2 + ell)/2 together with its index.
struct PentagonalIndex {
    int ell = 0;
    int value = 0;
};

/// p(0), p(1), ..., p(n) by the pentagonal-number recurrence.
std::vector<BigInt> partition_vector(int n);
/// p(n).
BigInt partition_count(int n);

/// Every partition of n as a non-increasing part list.
std::vector<std::vector<int>> partition_list(int n);
/// Number of partitions of n by direct enumeration.
BigInt partition_count_enum(int n);

/// Number of partitions of n into distinct odd parts.
BigInt selfconj_count(int n);

/// Total number of smallest parts across all partitions of n, by enumeration.
BigInt spt_count(int n);
/// Sum of (largest part - number of parts)^2 over all partitions of n.
BigInt rank_moment2(int n);

/// Alternating convolution sum_{k=0..2n} (-1)^k p(k) p(2n-k).
BigInt a_of_n(int n);

/// Generating function of spt as a q-series.
QSeries spt_series(int order);

/// All indices ell (both signs) whose pentagonal number is at most n,
/// sorted by value.
std::vector<PentagonalIndex> pentagonal_numbers_upto(int n);
/// The unique index ell with (3 ell^2 + ell)/2 = n, if n is pentagonal.
std::optional<int> is_pentagonal(int n);

} // namespace qpp

#endif
