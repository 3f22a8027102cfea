#pragma once

#include "polycosec/biseries.hpp"
#include "polycosec/sequence_table.hpp"
#include "polycosec/uniseries.hpp"
#include "polycosec/verify.hpp"

#include <vector>

namespace polycosec {

// tanh(t/2) truncated at the given order.
UniSeries tanh_half(int order);

// --- D_n^(k), four independent routes ---------------------------------------

// Generating-function route: n! * [t^n] of A_k(tanh(t/2)) / sinh t.
SequenceTable d_via_series(long k, int n_max);

// Row recurrence from the k = 0 base row; downward for negative k, inverted
// upward for positive k. The canonical route for stored tables.
SequenceTable d_via_recurrence(long k, int n_max);

// First closed formula: quadruple Stirling/Bernoulli sum.
Rational d_via_formula1(long k, long n);

// Second closed formula: second-kind Stirling sum.
Rational d_via_formula2(long k, long n);

// --- bivariate generating functions -----------------------------------------

// Closed-form grid for D_n^(-k): e^x(e^y-1)/(1+e^x+e^y-e^(x+y)) plus the
// x -> -x mirror term. Differs from the definitional grid by a constant
// (see f_constant_report).
BiSeries f_bivariate_closed(int order_x, int order_y);

// Definitional grid: coefficient (n,k) = D_n^(-k) / (n! k!), rows from
// d_via_series.
BiSeries f_bivariate_definitional(int order_x, int order_y);

// G(x,y) = e^(x+y) / (1+e^x+e^y-e^(x+y))^2.
BiSeries big_g(int order_x, int order_y);

// F(x,y) = G(x,y)+G(x,-y)+G(-x,y)+G(-x,-y); the even-even grid carries
// D_2n^(-2k-1) in the x^(2n)/(2n)! y^(2k)/(2k)! basis.
BiSeries big_f(int order_x, int order_y);

// --- duality machinery -------------------------------------------------------

// Triangular coefficient families from the two dual recursions:
// a[m][i] expands the squared sinh-derivation operator over sinh((2i+1)x),
// btilde[m][n] the odd tanh-power derivatives at 0; (2i+1)*a = btilde.
struct DualCoeffs {
    std::vector<std::vector<Rational>> a;
    std::vector<std::vector<Rational>> btilde;
};

DualCoeffs dual_coeffs(int m_max);

// --- verification reports -----------------------------------------------------

// D_2n^(-2k-1) == D_2k^(-2n-1) over the grid, via the recurrence route.
VerifyReport duality_report(int n_max, int k_max);

// Grid extracted from F equals the recurrence route.
VerifyReport big_f_grid_report(int n_max, int k_max);

// All four D routes coincide for k in [k_min, k_max], n <= n_max.
VerifyReport route_agreement_report(long k_min, long k_max, int n_max);

// f_definitional - f_closed has zero nonconstant coefficients; the measured
// constant is recorded as a note.
VerifyReport f_constant_report(int order);

// Operator-power expansion over sinh((2i+1)x) matches the a-triangle.
VerifyReport check_operator_expansion(int m_max, int order);

// (2i+1) * a[m][i] == btilde[m][i].
VerifyReport check_dual_triangles(int m_max);

// g_m from the operator route matches the 2m-th y-row of F.
VerifyReport check_g_rows_vs_big_f(int m_max, int order);

// btilde[m][n] == 2 * (2m+1)! * [x^(2m+1)] tanh^(2n+1)(x/2).
VerifyReport check_btilde_extraction(int m_max);

// Umbrella check: operator expansion, triangle identity, and F-row
// alignment at uniform bounds.
VerifyReport gh_crosscheck(int m_max, int order);

// --- multi-index family -------------------------------------------------------

// n! * [t^n] of A(k_1..k_r; tanh(t/2)) / sinh t.
SequenceTable d_multi_via_series(const IndexVector& k, int n_max);

// D_n^(k_1..k_r - 1) == sum_m C(n+1, 2m+1) D_(n-2m)^(k_1..k_r), both sides
// from the series route.
VerifyReport d_multi_recurrence_check(const IndexVector& k, int n_max);

} // namespace polycosec
