#pragma once

#include "polycosec/rational.hpp"

#include <string>
#include <vector>

namespace polycosec {

// Memoized exact tables. All functions are safe to call concurrently;
// table extension is exclusive, lookups are shared.

Integer factorial(long n);

// Standard binomial coefficient; 0 when k < 0 or k > n. Requires n >= 0.
Integer binomial(long n, long k);

// Partitions of an n-set into m nonempty blocks; {0,0} = 1, zero outside 0 <= m <= n.
Integer stirling2(long n, long m);

// Permutations of n elements with m cycles (unsigned first kind); [0,0] = 1,
// zero outside 0 <= m <= n.
Integer stirling1_unsigned(long n, long m);

// Bernoulli number with the B(1) = +1/2 convention, i.e. n! * [t^n] t*e^t/(e^t - 1).
Rational bernoulli(long n);

// Coefficient n!/m! * [t^n] tan^m(t); zero when n < m or n and m differ in parity.
// Requires m >= 1.
Integer tangent_higher(long n, long m);

// Plain-text dump of the memo tables, for cache persistence. Rows hold
// decimal integer strings (rationals for bernoulli); a table computed up to
// index N has N+1 rows (entries for bernoulli).
struct CombTablesDump {
    std::vector<std::vector<std::string>> binomial;
    std::vector<std::vector<std::string>> stirling1_unsigned;
    std::vector<std::vector<std::string>> stirling2;
    std::vector<std::vector<std::string>> tangent_higher;
    std::vector<std::string> bernoulli;
};

CombTablesDump dump_comb_tables();

// Installs previously dumped tables where they exceed the current memo.
// Throws std::invalid_argument on malformed shape or unparsable entries;
// callers treat that as a cache miss and rebuild.
void preload_comb_tables(const CombTablesDump& dump);

// Drops every memo table (test support).
void clear_comb_tables();

} // namespace polycosec
