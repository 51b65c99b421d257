#include "qpp/overpartitions.hpp"

#include <algorithm>
#include <climits>

#include "qpp/errors.hpp"
#include "qpp/partitions.hpp"

namespace qpp {

long long NTable::at(int r, int s, int m, int n) const {
    if (n > max_n) {
        throw TableTooSmall("NTable::at: weight " + std::to_string(n)
                            + " exceeds table bound " + std::to_string(max_n));
    }
    if (n < 0 || r < 0 || s < 0) {
        return 0;
    }
    auto it = counts.find({n, r, s, m});
    return it == counts.end() ? 0 : it->second;
}

std::vector<Overpartition> enumerate_overpartitions(int n) {
    std::vector<Overpartition> out;
    for (const auto& parts : partition_list(n)) {
        std::vector<int> values(parts);
        values.erase(std::unique(values.begin(), values.end()), values.end());
        std::size_t k = values.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            Overpartition op;
            op.parts = parts;
            for (std::size_t i = 0; i < k; ++i) {
                if (mask & (std::size_t{1} << i)) {
                    op.overlined.insert(values[i]);
                }
            }
            out.push_back(std::move(op));
        }
    }
    return out;
}

std::vector<OverpartitionPair> enumerate_pairs(int n) {
    std::vector<OverpartitionPair> out;
    for (int k = 0; k <= n; ++k) {
        std::vector<Overpartition> left = enumerate_overpartitions(k);
        std::vector<Overpartition> right = enumerate_overpartitions(n - k);
        for (const auto& l : left) {
            for (const auto& r : right) {
                out.push_back({l, r});
            }
        }
    }
    return out;
}

PairStats pair_stats(const OverpartitionPair& p) {
    PairStats st;
    st.r = static_cast<int>(p.lambda.overlined.size())
           + static_cast<int>(p.mu.parts.size() - p.mu.overlined.size());
    st.s = static_cast<int>(p.mu.parts.size());
    int largest = 0;
    if (!p.lambda.parts.empty()) {
        largest = std::max(largest, p.lambda.parts.front());
    }
    if (!p.mu.parts.empty()) {
        largest = std::max(largest, p.mu.parts.front());
    }
    int chi = 0;
    if (largest > 0) {
        bool in_lambda = !p.lambda.parts.empty() && p.lambda.parts.front() == largest;
        bool in_mu = !p.mu.parts.empty() && p.mu.parts.front() == largest;
        bool mu_overlined = p.mu.overlined.count(largest) > 0;
        if (in_mu && !mu_overlined && !in_lambda) {
            chi = 1;
        }
    }
    st.rank = largest - static_cast<int>(p.lambda.parts.size())
              - static_cast<int>(p.mu.parts.size()) - chi;
    return st;
}

namespace {

/// dp[w][k] = number of subsets of {0, ..., cap-1} with sum w and size k.
std::vector<std::vector<long long>> subset_table(int cap, int max_w) {
    std::vector<std::vector<long long>> dp(
        static_cast<std::size_t>(max_w) + 1,
        std::vector<long long>(static_cast<std::size_t>(cap) + 1, 0));
    dp[0][0] = 1;
    for (int v = 1; v < cap; ++v) {
        for (int w = max_w; w >= v; --w) {
            for (int k = cap; k >= 1; --k) {
                long long src = dp[static_cast<std::size_t>(w - v)]
                                  [static_cast<std::size_t>(k - 1)];
                if (src != 0) {
                    dp[static_cast<std::size_t>(w)][static_cast<std::size_t>(k)] += src;
                }
            }
        }
    }
    // The element 0 may be present or absent without changing the sum.
    for (int w = max_w; w >= 0; --w) {
        for (int k = cap; k >= 1; --k) {
            dp[static_cast<std::size_t>(w)][static_cast<std::size_t>(k)] +=
                dp[static_cast<std::size_t>(w)][static_cast<std::size_t>(k - 1)];
        }
    }
    return dp;
}

/// dp[w][c] = number of partitions of w into exactly c parts, each at most cap.
std::vector<std::vector<long long>> bounded_partition_table(int cap, int max_w) {
    std::vector<std::vector<long long>> dp(
        static_cast<std::size_t>(max_w) + 1,
        std::vector<long long>(static_cast<std::size_t>(max_w) + 1, 0));
    dp[0][0] = 1;
    for (int v = 1; v <= cap; ++v) {
        for (int w = v; w <= max_w; ++w) {
            for (int c = 1; c <= max_w; ++c) {
                long long src = dp[static_cast<std::size_t>(w - v)]
                                  [static_cast<std::size_t>(c - 1)];
                if (src != 0) {
                    dp[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)] += src;
                }
            }
        }
    }
    return dp;
}

} // namespace

NTable build_ntable(int max_n) {
    if (max_n < 0) {
        throw EngineError("build_ntable: negative bound");
    }
    NTable table;
    table.max_n = max_n;
    for (int big_n = 0; big_n <= max_n; ++big_n) {
        int budget = max_n - big_n;
        auto subsets = subset_table(big_n, budget);
        auto parts = bounded_partition_table(big_n, budget);
        for (int wd = 0; wd <= budget; ++wd) {
            for (int kd = 0; kd <= big_n; ++kd) {
                long long cd = subsets[static_cast<std::size_t>(wd)]
                                      [static_cast<std::size_t>(kd)];
                if (cd == 0) {
                    continue;
                }
                for (int we = 0; wd + we <= budget; ++we) {
                    for (int ke = 0; ke <= big_n; ++ke) {
                        long long ce = subsets[static_cast<std::size_t>(we)]
                                              [static_cast<std::size_t>(ke)];
                        if (ce == 0) {
                            continue;
                        }
                        for (int w1 = 0; wd + we + w1 <= budget; ++w1) {
                            for (int c1 = 0; c1 <= w1; ++c1) {
                                long long p1 = parts[static_cast<std::size_t>(w1)]
                                                    [static_cast<std::size_t>(c1)];
                                if (p1 == 0) {
                                    continue;
                                }
                                for (int w2 = 0; wd + we + w1 + w2 <= budget; ++w2) {
                                    for (int c2 = 0; c2 <= w2; ++c2) {
                                        long long p2 =
                                            parts[static_cast<std::size_t>(w2)]
                                                 [static_cast<std::size_t>(c2)];
                                        if (p2 == 0) {
                                            continue;
                                        }
                                        int n = big_n + wd + we + w1 + w2;
                                        std::array<int, 4> key{
                                            n, big_n - kd, big_n - ke, c1 - c2};
                                        table.counts[key] += cd * ce * p1 * p2;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return table;
}

BivarSeries blorank_series(const BigRational& d, const BigRational& e, int order) {
    if (d == 0 || e == 0) {
        throw DivisionByZeroParameter("blorank_series: parameters must be nonzero");
    }
    BivarSeries term = BivarSeries::one(order);
    BivarSeries acc = term;
    BigRational de = d * e;
    for (int n = 1; n <= order; ++n) {
        term = term.mul_binomial(BigRational(-1) / d, 0, n - 1)
                   .mul_binomial(BigRational(-1) / e, 0, n - 1)
                   .scaled(de)
                   .shifted(1)
                   .div_binomial(BigRational(1), 1, n)
                   .div_binomial(BigRational(1), -1, n);
        acc = acc + term;
    }
    return acc;
}

BigInt blocoeff_multisum(int m, int n, const NTable& table) {
    if (n > table.max_n) {
        throw TableTooSmall("blocoeff_multisum: weight " + std::to_string(n)
                            + " exceeds table bound " + std::to_string(table.max_n));
    }
    BigInt acc = 0;
    for (const auto& pent : pentagonal_numbers_upto(n)) {
        int sub = n - pent.value;
        auto lo = table.counts.lower_bound({sub, INT_MIN, INT_MIN, INT_MIN});
        auto hi = table.counts.lower_bound({sub + 1, INT_MIN, INT_MIN, INT_MIN});
        for (auto it = lo; it != hi; ++it) {
            int r = it->first[1];
            int s = it->first[2];
            int stored_m = it->first[3];
            if (stored_m != m - 2 * s + 2 * r) {
                continue;
            }
            acc += parity_sign(static_cast<long long>(r) + s + m + pent.ell)
                   * it->second;
        }
    }
    return acc;
}

namespace {

/// Weighted table sum at one weight: m^2 (m^2 + 11) (-1)^{r+s+m} over all
/// entries, with m recovered from the stored shifted index.
BigInt weighted_moment(const NTable& table, int weight) {
    BigInt acc = 0;
    auto lo = table.counts.lower_bound({weight, INT_MIN, INT_MIN, INT_MIN});
    auto hi = table.counts.lower_bound({weight + 1, INT_MIN, INT_MIN, INT_MIN});
    for (auto it = lo; it != hi; ++it) {
        int r = it->first[1];
        int s = it->first[2];
        long long m = it->first[3] + 2LL * s - 2LL * r;
        BigInt m2 = BigInt(m) * m;
        acc += parity_sign(r + s + m) * m2 * (m2 + 11) * it->second;
    }
    return acc;
}

} // namespace

BigInt idenp_lhs(int n, const NTable& table) {
    if (n > table.max_n) {
        throw TableTooSmall("idenp_lhs: weight " + std::to_string(n)
                            + " exceeds table bound " + std::to_string(table.max_n));
    }
    BigInt acc = 0;
    for (int j = 0; j <= n; ++j) {
        acc += a_of_n(j) * weighted_moment(table, n - j);
    }
    BigRational scaled = BigRational(acc) / -24;
    return rat_to_integer(scaled);
}

BigInt idenp_rhs(int n) {
    std::vector<BigInt> p = partition_vector(n);
    auto p_at = [&](long long x) -> BigInt {
        if (x < 0) {
            return 0;
        }
        return p[static_cast<std::size_t>(x)];
    };
    BigInt acc = 0;
    for (long long k = 0; k * k <= n; ++k) {
        BigInt inner = 3 * (n - k * k) * p_at(n - k * k)
                       - 2 * BigInt(n) * parity_sign(n) * p_at(n - 2 * k * k);
        if (k == 0) {
            acc += inner;
        } else {
            acc += 2 * parity_sign(k) * inner;
        }
    }
    return acc;
}

} // namespace qpp
