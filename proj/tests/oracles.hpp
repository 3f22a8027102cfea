// Test-only oracles, deliberately independent of the implementation paths
// they check: brute-force enumeration and direct series constructions.
#pragma once

#include "polycosec/index_vector.hpp"
#include "polycosec/rational.hpp"
#include "polycosec/uniseries.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace polycosec::testing {

// Number of partitions of an n-set into exactly m nonempty blocks, by
// enumerating restricted-growth strings.
inline long set_partition_count(int n, int m) {
    if (n == 0)
        return m == 0 ? 1 : 0;
    long count = 0;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    while (true) {
        const int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        if (blocks == m)
            ++count;
        int i = n - 1;
        for (; i > 0; --i) {
            const int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + i);
            if (rgs[static_cast<std::size_t>(i)] <= prefix_max) {
                ++rgs[static_cast<std::size_t>(i)];
                std::fill(rgs.begin() + i + 1, rgs.end(), 0);
                break;
            }
        }
        if (i == 0)
            break;
    }
    return count;
}

// Number of permutations of n elements with exactly m cycles, by enumeration.
inline long permutation_cycle_count(int n, int m) {
    if (n == 0)
        return m == 0 ? 1 : 0;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        int cycles = 0;
        for (int s = 0; s < n; ++s) {
            if (seen[static_cast<std::size_t>(s)])
                continue;
            ++cycles;
            for (int j = s; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)])
                seen[static_cast<std::size_t>(j)] = true;
        }
        if (cycles == m)
            ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// Plain iterative factorial, independent of the memoized table.
inline Integer factorial_oracle(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// Maclaurin series of tan t, built from sin/cos rather than the hyperbolic
// constructors used by the implementation.
inline UniSeries tan_series(int order) {
    UniSeries sin_s(order), cos_s(order);
    for (int i = 0; i <= order; ++i) {
        const Rational c(Integer(1), factorial_oracle(i));
        if (i % 2 == 1)
            sin_s.set_coeff(i, ((i / 2) % 2 == 0) ? c : -c);
        else
            cos_s.set_coeff(i, ((i / 2) % 2 == 0) ? c : -c);
    }
    return divide(sin_s, cos_s);
}

// Coefficients of the multi-index odd series by direct tuple enumeration.
inline std::map<int, Rational> a_multi_bruteforce(const IndexVector& k, int order) {
    std::map<int, Rational> coeffs;
    const int r = static_cast<int>(k.depth());
    std::vector<int> tuple(static_cast<std::size_t>(r));
    // Depth-first walk over 0 < m_1 < ... < m_r <= order with m_i == i (mod 2).
    auto walk = [&](auto&& self, int depth, int prev) -> void {
        if (depth == r) {
            Rational w(1);
            for (int i = 0; i < r; ++i)
                w *= int_pow(tuple[static_cast<std::size_t>(i)], -k[static_cast<std::size_t>(i)]);
            coeffs[tuple[static_cast<std::size_t>(r - 1)]] += w;
            return;
        }
        for (int m = prev + 1; m <= order; ++m) {
            if ((m % 2) != ((depth + 1) % 2))
                continue;
            tuple[static_cast<std::size_t>(depth)] = m;
            self(self, depth + 1, m);
        }
    };
    walk(walk, 0, 0);
    const Rational scale = int_pow(2, r);
    for (auto& [e, c] : coeffs)
        c *= scale;
    return coeffs;
}

// Deterministic random series for property tests.
inline UniSeries random_series(std::mt19937& rng, int order, int valuation = 0) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    UniSeries s(order);
    for (int i = valuation; i <= order; ++i)
        s.set_coeff(i, Rational(num(rng), den(rng)));
    return s;
}

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-200, 200);
    std::uniform_int_distribution<long> den(1, 60);
    return Rational(num(rng), den(rng));
}

} // namespace polycosec::testing
