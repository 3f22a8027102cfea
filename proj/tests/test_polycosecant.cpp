#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "polycosec/polycosecant.hpp"

using namespace polycosec;

TEST_CASE("series route: base family and cosecant values") {
    const SequenceTable base = d_via_series(0, 12);
    CHECK(base.value(0) == Rational(1));
    for (int n = 1; n <= 12; ++n)
        CHECK(base.value(n).is_zero());

    const SequenceTable k1 = d_via_series(1, 6);
    CHECK(k1.value(2) == Rational(-1, 3));
    CHECK(k1.value(4) == Rational(7, 15));
    CHECK(k1.value(6) == Rational(-31, 21));
}

TEST_CASE("recurrence route: negative and positive levels") {
    const SequenceTable m1 = d_via_recurrence(-1, 10);
    for (int n = 0; n <= 10; ++n)
        CHECK(m1.value(n) == (n % 2 == 0 ? Rational(1) : Rational(0)));

    const SequenceTable k2 = d_via_recurrence(2, 4);
    CHECK(k2.value(0) == Rational(1));
    CHECK(k2.value(2) == Rational(-4, 9));

    const SequenceTable m3 = d_via_recurrence(-3, 2);
    CHECK(m3.value(2) == Rational(13));
}

TEST_CASE("closed formulas: frozen spot values") {
    for (long k : {-5L, -1L, 0L, 1L, 4L}) {
        CHECK(d_via_formula1(k, 0) == Rational(1));
        CHECK(d_via_formula2(k, 0) == Rational(1));
    }
    CHECK(d_via_formula1(1, 2) == Rational(-1, 3));
    CHECK(d_via_formula1(0, 2) == Rational(0));
    CHECK(d_via_formula2(1, 2) == Rational(-1, 3));
    CHECK(d_via_formula2(-1, 2) == d_via_recurrence(-1, 2).value(2));
}

TEST_CASE("four routes agree on a desk grid") {
    const VerifyReport rep = route_agreement_report(-4, 4, 12);
    CHECK(rep.all_pass());
    CHECK(rep.item_count() == 9 * 13);
}

TEST_CASE("odd indices vanish on every route") {
    for (long k = -3; k <= 3; ++k) {
        const SequenceTable s = d_via_series(k, 9);
        const SequenceTable r = d_via_recurrence(k, 9);
        for (int n = 1; n <= 9; n += 2) {
            CHECK(s.value(n).is_zero());
            CHECK(r.value(n).is_zero());
            CHECK(d_via_formula1(k, n).is_zero());
            CHECK(d_via_formula2(k, n).is_zero());
        }
    }
}

TEST_CASE("closed bivariate f: constant, grid cell, evenness") {
    const BiSeries f = f_bivariate_closed(8, 8);
    CHECK(f.coeff(0, 0).is_zero());
    CHECK(f.egf_coeff(2, 1) == Rational(1)); // D(2)^(-1)
    for (int a = 1; a <= 8; a += 2)
        for (int b = 0; b <= 8; ++b)
            CHECK(f.coeff(a, b).is_zero());
}

TEST_CASE("definitional bivariate f: rows and columns") {
    const BiSeries f = f_bivariate_definitional(6, 6);
    CHECK(f.coeff(0, 0) == Rational(1));
    for (int n = 1; n <= 6; ++n)
        CHECK(f.coeff(n, 0).is_zero()); // k = 0 row collapses
    for (int k = 0; k <= 6; ++k)
        CHECK(f.egf_coeff(0, k) == Rational(1)); // D(0)^(-k) = 1
    CHECK(f.egf_coeff(2, 1) == Rational(1));
}

TEST_CASE("4G expansion matches the published-style table") {
    static const long expected[5][5] = {
        {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 4, 4, 1, 0}, {1, 8, 13, 8, 1},
    };
    const BiSeries g4 = scale(big_g(4, 4), Rational(4));
    for (int total = 0; total <= 4; ++total)
        for (int a = total; a >= 0; --a)
            CHECK(g4.egf_coeff(a, total - a) == Rational(expected[total][total - a]));
}

TEST_CASE("F: constant term, 13 cell, even-even support") {
    const BiSeries f = big_f(6, 6);
    CHECK(f.egf_coeff(0, 0) == Rational(1)); // D(0)^(-1)
    CHECK(f.egf_coeff(2, 2) == Rational(13)); // D(2)^(-3)
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b)
            if (a % 2 != 0 || b % 2 != 0)
                CHECK(f.coeff(a, b).is_zero());
}

TEST_CASE("duality holds on a desk grid") {
    const VerifyReport rep = duality_report(6, 6);
    CHECK(rep.all_pass());
    // Specific off-diagonal pair: D(2)^(-1) == D(0)^(-3) == 1.
    CHECK(d_via_recurrence(-1, 2).value(2) == Rational(1));
    CHECK(d_via_recurrence(-3, 0).value(0) == Rational(1));
}

TEST_CASE("F-grid extraction equals the recurrence route") {
    CHECK(big_f_grid_report(5, 5).all_pass());
}

TEST_CASE("dual coefficient triangles") {
    const DualCoeffs dc = dual_coeffs(12);
    CHECK(dc.a[0][0] == Rational(1));
    CHECK(dc.btilde[0][0] == Rational(1));
    CHECK(dc.a[1][0] == Rational(-1, 2));
    CHECK(dc.a[1][1] == Rational(1, 2));
    CHECK(dc.btilde[1][1] == Rational(3, 2));

    // Oracle for m=1: (sinh x d/dx)^2 sinh x == (sinh 3x - sinh x)/2.
    const int order = 16;
    const UniSeries s = elementary(Elementary::Sinh, order + 2);
    UniSeries lhs = s;
    for (int step = 0; step < 2; ++step)
        lhs = mul(s, differentiate(lhs));
    const UniSeries sinh3 = scale_var(elementary(Elementary::Sinh, order), Rational(3));
    const UniSeries rhs =
        scale(sub(sinh3, elementary(Elementary::Sinh, order)), Rational(1, 2));
    CHECK(truncate(lhs, order) == rhs);
}

TEST_CASE("operator expansion, triangle identity, F rows") {
    CHECK(check_operator_expansion(4, 16).all_pass());
    CHECK(check_dual_triangles(12).all_pass());
    CHECK(check_g_rows_vs_big_f(3, 12).all_pass());
    CHECK(check_btilde_extraction(6).all_pass());
    CHECK(gh_crosscheck(3, 12).all_pass());
}

TEST_CASE("g_0 is cosh x") {
    const BiSeries f = big_f(10, 2);
    const UniSeries row0 = f.row_y(0);
    CHECK(row0 == elementary(Elementary::Cosh, 10));
}

TEST_CASE("definitional minus closed f is the constant 1") {
    const VerifyReport rep = f_constant_report(10);
    CHECK(rep.all_pass());
    REQUIRE(rep.notes().size() == 1);
    CHECK(rep.notes()[0].second == "1");
}

TEST_CASE("multi-index series: depth-1 reduction and first values") {
    for (long k : {-2L, 0L, 3L}) {
        const SequenceTable multi = d_multi_via_series(IndexVector{k}, 20);
        const SequenceTable single = d_via_series(k, 20);
        for (int n = 0; n <= 20; ++n)
            CHECK(multi.value(n) == single.value(n));
    }

    const SequenceTable pair = d_multi_via_series(IndexVector{0, 0}, 8);
    CHECK(pair.value(1) == Rational(1));
    for (int n = 0; n <= 8; n += 2)
        CHECK(pair.value(n).is_zero()); // depth 2: even indices vanish
}

TEST_CASE("multi-index recurrence checks") {
    CHECK(d_multi_recurrence_check(IndexVector{1}, 20).all_pass());
    CHECK(d_multi_recurrence_check(IndexVector{1, 1}, 16).all_pass());
    CHECK(d_multi_recurrence_check(IndexVector{0, 0, 1}, 12).all_pass());
}
