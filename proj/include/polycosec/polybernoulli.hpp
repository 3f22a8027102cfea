#pragma once

#include "polycosec/biseries.hpp"
#include "polycosec/sequence_table.hpp"
#include "polycosec/verify.hpp"

namespace polycosec {

enum class PolyBernoulliKind { B, C };

// e^(x+y) / (e^x + e^y - e^(x+y))^2: the grid whose (n,k) cell in the
// x^n/n! y^k/k! basis is C_n^(-k-1).
BiSeries c_generating_grid(int order_x, int order_y);

// Explicit second-kind Stirling sum for B_n^(k) / C_n^(k).
Rational pb_explicit(PolyBernoulliKind kind, long n, long k);

// Series oracle: expand Li_k(1 - e^(-t)) as a truncated finite sum and
// divide by 1 - e^(-t) (kind B) or e^t - 1 (kind C).
SequenceTable pb_series_oracle(PolyBernoulliKind kind, long k, int n_max);

// Explicit formulas agree with the series oracle over a (k, n) box.
VerifyReport pb_match_report(PolyBernoulliKind kind, long k_min, long k_max, int n_max);

// B_n^(-k) == B_k^(-n), resp. C_n^(-k-1) == C_k^(-n-1), over the grid.
VerifyReport pb_duality_report(PolyBernoulliKind kind, int n_max, int k_max);

// Bivariate e^(x+y)/(e^x+e^y-e^(x+y))^2 grid equals C_n^(-k-1) cell-wise;
// the grid symmetry re-verifies the C duality.
VerifyReport c_gf_check(int order);

} // namespace polycosec
