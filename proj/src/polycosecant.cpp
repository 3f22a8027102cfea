#include "polycosec/polycosecant.hpp"

#include "polycosec/combinatorics.hpp"

#include <algorithm>
#include <string>

namespace polycosec {

namespace {

std::string cell(const std::string& family, long n, long k) {
    return family + "(" + std::to_string(n) + ")^(" + std::to_string(k) + ")";
}

// Rows of D values from level 0 down to level k_min (inclusive), each row
// indexed by n. rows[j] holds level -j.
std::vector<std::vector<Rational>> d_rows_down(long k_min, int n_max) {
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> row(static_cast<std::size_t>(n_max) + 1);
    row[0] = Rational(1);
    rows.push_back(row);
    for (long level = 0; level > k_min; --level) {
        std::vector<Rational> next(row.size());
        for (int n = 0; n <= n_max; ++n) {
            Rational acc;
            for (int m = 0; 2 * m <= n; ++m)
                acc += Rational(binomial(n + 1, 2 * m + 1)) * row[static_cast<std::size_t>(n - 2 * m)];
            next[static_cast<std::size_t>(n)] = acc;
        }
        row = std::move(next);
        rows.push_back(row);
    }
    return rows;
}

UniSeries d_series_from_numerator(const UniSeries& a_at_tanh_half, int n_max) {
    return divide(a_at_tanh_half, elementary(Elementary::Sinh, n_max + 1));
}

// h = (sinh x * d/dx) f; drops the retained order by one.
UniSeries apply_sinh_derivation(const UniSeries& f, const UniSeries& sinh_big) {
    return mul(sinh_big, differentiate(f));
}

UniSeries operator_power_on_sinh(int applications, int order) {
    const int start = order + applications;
    const UniSeries sinh_big = elementary(Elementary::Sinh, start);
    UniSeries acc = sinh_big;
    for (int step = 0; step < applications; ++step)
        acc = apply_sinh_derivation(acc, sinh_big);
    return acc;
}

Rational at(const std::vector<Rational>& row, long i) {
    if (i < 0 || i >= static_cast<long>(row.size()))
        return Rational(0);
    return row[static_cast<std::size_t>(i)];
}

} // namespace

UniSeries tanh_half(int order) {
    return scale_var(elementary(Elementary::Tanh, order), Rational(1, 2));
}

SequenceTable d_via_series(long k, int n_max) {
    const int N = n_max + 1;
    const UniSeries numerator = compose(a_series(k, N), tanh_half(N));
    const UniSeries q = d_series_from_numerator(numerator, n_max);
    SequenceTable t(Family::D, IndexVector{k});
    for (int n = 0; n <= n_max; ++n)
        t.set(n, q.egf_coeff(n), Route::DefinitionSeries);
    return t;
}

SequenceTable d_via_recurrence(long k, int n_max) {
    SequenceTable t(Family::D, IndexVector{k});
    if (k <= 0) {
        const auto rows = d_rows_down(k, n_max);
        const auto& row = rows[static_cast<std::size_t>(-k)];
        for (int n = 0; n <= n_max; ++n)
            t.set(n, row[static_cast<std::size_t>(n)], Route::Recurrence);
        return t;
    }
    std::vector<Rational> row(static_cast<std::size_t>(n_max) + 1);
    row[0] = Rational(1);
    for (long level = 1; level <= k; ++level) {
        std::vector<Rational> next(row.size());
        next[0] = Rational(1);
        for (int n = 1; n <= n_max; ++n) {
            Rational acc = row[static_cast<std::size_t>(n)];
            for (int m = 1; 2 * m <= n; ++m)
                acc -= Rational(binomial(n + 1, 2 * m + 1)) * next[static_cast<std::size_t>(n - 2 * m)];
            next[static_cast<std::size_t>(n)] = acc / Rational(n + 1);
        }
        row = std::move(next);
    }
    for (int n = 0; n <= n_max; ++n)
        t.set(n, row[static_cast<std::size_t>(n)], Route::Recurrence);
    return t;
}

Rational d_via_formula1(long k, long n) {
    Rational total;
    for (long m = 0; 2 * m <= n; ++m) {
        Rational inner;
        for (long p = 1; p <= 2 * m + 1; ++p) {
            for (long q = 0; q + 2 * m <= n; ++q) {
                // Odd Bernoulli numbers beyond B_1 vanish; p+q+1 >= 2 always.
                if ((p + q) % 2 == 0 && p + q >= 2)
                    continue;
                Integer two_pow;
                mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(p + q + 1));
                const Integer factor =
                    (two_pow - 1) * binomial(n, q) * stirling1_unsigned(2 * m + 1, p) *
                    stirling2(n - q, 2 * m);
                if (sgn(factor) == 0)
                    continue;
                inner += Rational(factor) * bernoulli(p + q + 1) / Rational(p + q + 1);
            }
        }
        total += int_pow(2 * m + 1, -(k + 1)) * inner;
    }
    return Rational(4) * total;
}

Rational d_via_formula2(long k, long n) {
    Rational total;
    for (long m = 0; 2 * m <= n; ++m) {
        Rational inner;
        for (long p = 2 * m; p <= n; ++p) {
            const Integer numer = factorial(p + 1) * binomial(p, 2 * m) * stirling2(n + 1, p + 1);
            Integer two_pow;
            mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(p));
            Rational term(numer, two_pow);
            if (p % 2 != 0)
                term = -term;
            inner += term;
        }
        total += int_pow(2 * m + 1, -(k + 1)) * inner;
    }
    return total;
}

BiSeries f_bivariate_closed(int order_x, int order_y) {
    const BiSeries one = BiSeries::constant(order_x, order_y, Rational(1));
    const BiSeries ey = BiSeries::exponential(0, 1, order_x, order_y);

    const BiSeries ex = BiSeries::exponential(1, 0, order_x, order_y);
    const BiSeries exy = BiSeries::exponential(1, 1, order_x, order_y);
    const BiSeries fwd = bi_from_rational(exy - ex, one + ex + ey - exy);

    const BiSeries emx = BiSeries::exponential(-1, 0, order_x, order_y);
    const BiSeries emxy = BiSeries::exponential(-1, 1, order_x, order_y);
    const BiSeries bwd = bi_from_rational(emxy - emx, one + emx + ey - emxy);

    return fwd + bwd;
}

BiSeries f_bivariate_definitional(int order_x, int order_y) {
    BiSeries f(order_x, order_y);
    for (int k = 0; k <= order_y; ++k) {
        const SequenceTable row = d_via_series(-static_cast<long>(k), order_x);
        const Rational ky(Integer(1), factorial(k));
        for (int n = 0; n <= order_x; ++n)
            f.set_coeff(n, k, row.value(n) * Rational(Integer(1), factorial(n)) * ky);
    }
    return f;
}

BiSeries big_g(int order_x, int order_y) {
    const BiSeries one = BiSeries::constant(order_x, order_y, Rational(1));
    const BiSeries ex = BiSeries::exponential(1, 0, order_x, order_y);
    const BiSeries ey = BiSeries::exponential(0, 1, order_x, order_y);
    const BiSeries exy = BiSeries::exponential(1, 1, order_x, order_y);
    const BiSeries den = one + ex + ey - exy;
    return bi_from_rational(exy, mul(den, den));
}

BiSeries big_f(int order_x, int order_y) {
    const BiSeries g = big_g(order_x, order_y);
    const Rational plus(1), minus(-1);
    return g + scale_vars(g, plus, minus) + scale_vars(g, minus, plus) +
           scale_vars(g, minus, minus);
}

DualCoeffs dual_coeffs(int m_max) {
    DualCoeffs dc;
    dc.a.push_back({Rational(1)});
    dc.btilde.push_back({Rational(1)});
    const Rational half(1, 2);
    for (int m = 1; m <= m_max; ++m) {
        const auto& pa = dc.a.back();
        const auto& pb = dc.btilde.back();
        std::vector<Rational> ra(static_cast<std::size_t>(m) + 1);
        std::vector<Rational> rb(static_cast<std::size_t>(m) + 1);
        for (long i = 0; i <= m; ++i) {
            ra[static_cast<std::size_t>(i)] =
                half * (Rational(i * (2 * i - 1)) * at(pa, i - 1) -
                        Rational((2 * i + 1) * (2 * i + 1)) * at(pa, i) +
                        Rational((i + 1) * (2 * i + 3)) * at(pa, i + 1));
            rb[static_cast<std::size_t>(i)] =
                Rational(2 * i + 1, 2) * (Rational(i) * at(pb, i - 1) -
                                          Rational(2 * i + 1) * at(pb, i) +
                                          Rational(i + 1) * at(pb, i + 1));
        }
        dc.a.push_back(std::move(ra));
        dc.btilde.push_back(std::move(rb));
    }
    return dc;
}

VerifyReport duality_report(int n_max, int k_max) {
    VerifyReport rep("duality-D");
    const int bound = std::max(n_max, k_max);
    const auto rows = d_rows_down(-(2 * static_cast<long>(bound) + 1), 2 * bound);
    for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= k_max; ++k) {
            const Rational& lhs = rows[static_cast<std::size_t>(2 * k + 1)][static_cast<std::size_t>(2 * n)];
            const Rational& rhs = rows[static_cast<std::size_t>(2 * n + 1)][static_cast<std::size_t>(2 * k)];
            const bool ok = lhs == rhs;
            rep.add(cell("D", 2 * n, -2 * k - 1) + " == " + cell("D", 2 * k, -2 * n - 1), ok,
                    ok ? lhs.str() : lhs.str() + " != " + rhs.str());
        }
    return rep;
}

VerifyReport big_f_grid_report(int n_max, int k_max) {
    VerifyReport rep("big-F-grid");
    const BiSeries f = big_f(2 * n_max, 2 * k_max);
    const auto rows = d_rows_down(-(2 * static_cast<long>(k_max) + 1), 2 * n_max);
    for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= k_max; ++k) {
            const Rational lhs = f.egf_coeff(2 * n, 2 * k);
            const Rational& rhs = rows[static_cast<std::size_t>(2 * k + 1)][static_cast<std::size_t>(2 * n)];
            const bool ok = lhs == rhs;
            rep.add("F grid " + cell("D", 2 * n, -2 * k - 1), ok,
                    ok ? lhs.str() : lhs.str() + " != " + rhs.str());
        }
    return rep;
}

VerifyReport route_agreement_report(long k_min, long k_max, int n_max) {
    VerifyReport rep("routes-D");
    for (long k = k_min; k <= k_max; ++k) {
        const SequenceTable by_series = d_via_series(k, n_max);
        const SequenceTable by_rec = d_via_recurrence(k, n_max);
        for (int n = 0; n <= n_max; ++n) {
            const Rational& v0 = by_series.value(n);
            const Rational& v1 = by_rec.value(n);
            const Rational v2 = d_via_formula1(k, n);
            const Rational v3 = d_via_formula2(k, n);
            const bool ok = v0 == v1 && v0 == v2 && v0 == v3;
            rep.add(cell("D", n, k) + " across routes", ok,
                    ok ? v0.str()
                       : "series=" + v0.str() + " recurrence=" + v1.str() +
                             " formula1=" + v2.str() + " formula2=" + v3.str());
        }
    }
    return rep;
}

VerifyReport f_constant_report(int order) {
    VerifyReport rep("f-constant");
    const BiSeries diff = f_bivariate_definitional(order, order) - f_bivariate_closed(order, order);
    for (int a = 0; a <= order; ++a) {
        bool row_ok = true;
        std::string bad;
        for (int b = 0; b <= order; ++b) {
            if (a == 0 && b == 0)
                continue;
            if (!diff.coeff(a, b).is_zero()) {
                row_ok = false;
                bad = "(" + std::to_string(a) + "," + std::to_string(b) + ") = " +
                      diff.coeff(a, b).str();
                break;
            }
        }
        rep.add("nonconstant difference row a=" + std::to_string(a) + " vanishes", row_ok, bad);
    }
    rep.note("constant difference (definitional - closed)", diff.coeff(0, 0).str());
    return rep;
}

VerifyReport check_operator_expansion(int m_max, int order) {
    VerifyReport rep("operator-expansion");
    const DualCoeffs dc = dual_coeffs(m_max);
    for (int m = 0; m <= m_max; ++m) {
        const UniSeries lhs = truncate(operator_power_on_sinh(2 * m, order), order);
        UniSeries rhs(order);
        const UniSeries base = elementary(Elementary::Sinh, order);
        for (int i = 0; i <= m; ++i)
            rhs = rhs + dc.a[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)] *
                            scale_var(base, Rational(2 * i + 1));
        rep.add("operator power 2m=" + std::to_string(2 * m) + " over sinh((2i+1)x)", lhs == rhs);
    }
    return rep;
}

VerifyReport check_dual_triangles(int m_max) {
    VerifyReport rep("dual-triangles");
    const DualCoeffs dc = dual_coeffs(m_max);
    for (int m = 0; m <= m_max; ++m) {
        bool ok = true;
        std::string bad;
        for (int i = 0; i <= m; ++i) {
            const Rational lhs = Rational(2 * i + 1) * dc.a[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)];
            const Rational& rhs = dc.btilde[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)];
            if (lhs != rhs) {
                ok = false;
                bad = "i=" + std::to_string(i) + ": " + lhs.str() + " != " + rhs.str();
                break;
            }
        }
        rep.add("(2i+1)a == btilde at m=" + std::to_string(m), ok, bad);
    }
    return rep;
}

VerifyReport check_g_rows_vs_big_f(int m_max, int order) {
    VerifyReport rep("g-rows-vs-F");
    const BiSeries f = big_f(order, 2 * m_max);
    for (int m = 0; m <= m_max; ++m) {
        const UniSeries g_m = truncate(differentiate(operator_power_on_sinh(2 * m, order + 1)), order);
        const UniSeries f_row = scale(f.row_y(2 * m), Rational(factorial(2 * m)));
        rep.add("g_m vs F row 2m=" + std::to_string(2 * m), g_m == truncate(f_row, order));
    }
    return rep;
}

VerifyReport check_btilde_extraction(int m_max) {
    VerifyReport rep("btilde-extraction");
    const DualCoeffs dc = dual_coeffs(m_max);
    const int order = 2 * m_max + 1;
    const UniSeries th = tanh_half(order);
    const UniSeries th2 = mul(th, th);
    UniSeries odd_power = th; // tanh^(2n+1)(x/2)
    for (int n = 0; n <= m_max; ++n) {
        if (n > 0)
            odd_power = mul(odd_power, th2);
        bool ok = true;
        std::string bad;
        for (int m = n; m <= m_max; ++m) {
            const Rational extracted =
                Rational(2) * Rational(factorial(2 * m + 1)) * odd_power.coeff(2 * m + 1);
            const Rational& expected = dc.btilde[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
            if (extracted != expected) {
                ok = false;
                bad = "m=" + std::to_string(m) + ": " + extracted.str() + " != " + expected.str();
                break;
            }
        }
        rep.add("tanh-power extraction at n=" + std::to_string(n), ok, bad);
    }
    return rep;
}

VerifyReport gh_crosscheck(int m_max, int order) {
    VerifyReport rep("gh");
    rep.merge(check_operator_expansion(m_max, order));
    rep.merge(check_dual_triangles(m_max));
    rep.merge(check_g_rows_vs_big_f(m_max, order));
    return rep;
}

SequenceTable d_multi_via_series(const IndexVector& k, int n_max) {
    const int N = n_max + 1;
    const UniSeries numerator = compose(a_multi_series(k, N), tanh_half(N));
    const UniSeries q = d_series_from_numerator(numerator, n_max);
    SequenceTable t(Family::DMulti, k);
    for (int n = 0; n <= n_max; ++n)
        t.set(n, q.egf_coeff(n), Route::DefinitionSeries);
    return t;
}

VerifyReport d_multi_recurrence_check(const IndexVector& k, int n_max) {
    VerifyReport rep("multi-recurrence");
    std::vector<long> lowered = k.entries();
    lowered.back() -= 1;
    const SequenceTable lhs = d_multi_via_series(IndexVector(lowered), n_max);
    const SequenceTable rhs = d_multi_via_series(k, n_max);
    for (int n = 0; n <= n_max; ++n) {
        Rational acc;
        for (int m = 0; 2 * m <= n; ++m)
            acc += Rational(binomial(n + 1, 2 * m + 1)) * rhs.value(n - 2 * m);
        const bool ok = lhs.value(n) == acc;
        rep.add("multi recurrence (" + IndexVector(lowered).str() + ") n=" + std::to_string(n), ok,
                ok ? "" : lhs.value(n).str() + " != " + acc.str());
    }
    return rep;
}

} // namespace polycosec
