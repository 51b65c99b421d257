#include "qpp/partitions.hpp"

#include <cmath>

#include "qpp/errors.hpp"
#include "qpp/pochhammer.hpp"

namespace qpp {

std::vector<BigInt> partition_vector(int n) {
    if (n < 0) {
        throw EngineError("partition_vector: negative argument");
    }
    std::vector<BigInt> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1;
    for (int i = 1; i <= n; ++i) {
        BigInt acc = 0;
        for (int k = 1;; ++k) {
            long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > i) {
                break;
            }
            int sign = parity_sign(k + 1);
            acc += sign * p[static_cast<std::size_t>(i - g1)];
            if (g2 <= i) {
                acc += sign * p[static_cast<std::size_t>(i - g2)];
            }
        }
        p[static_cast<std::size_t>(i)] = acc;
    }
    return p;
}

BigInt partition_count(int n) {
    return partition_vector(n)[static_cast<std::size_t>(n)];
}

namespace {

void extend_partition(int remaining, int max_part, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        extend_partition(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> partition_list(int n) {
    if (n < 0) {
        throw EngineError("partition_list: negative argument");
    }
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    extend_partition(n, n == 0 ? 1 : n, cur, out);
    return out;
}

BigInt partition_count_enum(int n) {
    return BigInt(partition_list(n).size());
}

BigInt selfconj_count(int n) {
    if (n < 0) {
        return 0;
    }
    // Count partitions into distinct odd parts by a 0/1 knapsack over odd values.
    std::vector<BigInt> ways(static_cast<std::size_t>(n) + 1);
    ways[0] = 1;
    for (int part = 1; part <= n; part += 2) {
        for (int w = n; w >= part; --w) {
            ways[static_cast<std::size_t>(w)] += ways[static_cast<std::size_t>(w - part)];
        }
    }
    return ways[static_cast<std::size_t>(n)];
}

BigInt spt_count(int n) {
    BigInt total = 0;
    for (const auto& parts : partition_list(n)) {
        if (parts.empty()) {
            continue;
        }
        int smallest = parts.back();
        long long mult = 0;
        for (auto it = parts.rbegin(); it != parts.rend() && *it == smallest; ++it) {
            ++mult;
        }
        total += mult;
    }
    return total;
}

BigInt rank_moment2(int n) {
    BigInt total = 0;
    for (const auto& parts : partition_list(n)) {
        if (parts.empty()) {
            continue;
        }
        long long rank = parts.front() - static_cast<long long>(parts.size());
        total += BigInt(rank) * rank;
    }
    return total;
}

BigInt a_of_n(int n) {
    if (n < 0) {
        throw EngineError("a_of_n: negative argument");
    }
    std::vector<BigInt> p = partition_vector(2 * n);
    BigInt acc = 0;
    for (int k = 0; k <= 2 * n; ++k) {
        acc += parity_sign(k) * p[static_cast<std::size_t>(k)]
               * p[static_cast<std::size_t>(2 * n - k)];
    }
    return acc;
}

QSeries spt_series(int order) {
    QSeries acc(order);
    QSeries poch = QSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        poch = poch.mul_binomial(BigRational(1), n);
        QSeries term = poch.shifted(n)
                           .div_binomial(BigRational(1), n)
                           .div_binomial(BigRational(1), n);
        acc = acc + term;
    }
    for (int k = 1; k <= order; ++k) {
        acc = acc.div_binomial(BigRational(1), k);
    }
    return acc;
}

std::vector<PentagonalIndex> pentagonal_numbers_upto(int n) {
    std::vector<PentagonalIndex> out;
    auto value_of = [](long long ell) {
        return (3 * ell * ell + ell) / 2;
    };
    if (n < 0) {
        return out;
    }
    out.push_back({0, 0});
    for (long long k = 1;; ++k) {
        long long neg = value_of(-k);
        long long pos = value_of(k);
        bool any = false;
        if (neg <= n) {
            out.push_back({static_cast<int>(-k), static_cast<int>(neg)});
            any = true;
        }
        if (pos <= n) {
            out.push_back({static_cast<int>(k), static_cast<int>(pos)});
            any = true;
        }
        if (!any) {
            break;
        }
    }
    return out;
}

std::optional<int> is_pentagonal(int n) {
    if (n < 0) {
        return std::nullopt;
    }
    long long disc = 1 + 24LL * n;
    long long root = std::llround(std::sqrt(static_cast<double>(disc)));
    while (root * root > disc) {
        --root;
    }
    while ((root + 1) * (root + 1) <= disc) {
        ++root;
    }
    if (root * root != disc) {
        return std::nullopt;
    }
    if ((root - 1) % 6 == 0) {
        return static_cast<int>((root - 1) / 6);
    }
    if ((-root - 1) % 6 == 0) {
        return static_cast<int>((-root - 1) / 6);
    }
    return std::nullopt;
}

} // namespace qpp
