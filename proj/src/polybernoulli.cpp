#include "polycosec/polybernoulli.hpp"

#include "polycosec/biseries.hpp"
#include "polycosec/combinatorics.hpp"
#include "polycosec/uniseries.hpp"

#include <string>

namespace polycosec {

namespace {

std::string kind_name(PolyBernoulliKind kind) {
    return kind == PolyBernoulliKind::B ? "B" : "C";
}

// Li_k(1 - e^(-t)) truncated: 1 - e^(-t) has valuation 1, so only the
// first `order` powers contribute.
UniSeries li_k_of_w(long k, int order) {
    const UniSeries w =
        sub(UniSeries::constant(order, Rational(1)),
            scale_var(elementary(Elementary::Exp, order), Rational(-1)));
    UniSeries acc(order);
    UniSeries wp = UniSeries::constant(order, Rational(1));
    for (long m = 1; m <= order; ++m) {
        wp = mul(wp, w);
        acc = add(acc, scale(wp, int_pow(m, -k)));
    }
    return acc;
}

} // namespace

Rational pb_explicit(PolyBernoulliKind kind, long n, long k) {
    if (n < 0)
        throw std::domain_error("poly-Bernoulli index n must be nonnegative");
    Rational acc;
    for (long i = 0; i <= n; ++i) {
        const Integer stirling = kind == PolyBernoulliKind::B ? stirling2(n, i)
                                                              : stirling2(n + 1, i + 1);
        if (sgn(stirling) == 0)
            continue;
        Rational term = Rational(factorial(i) * stirling) * int_pow(i + 1, -k);
        if (i % 2 != 0)
            term = -term;
        acc += term;
    }
    if (n % 2 != 0)
        acc = -acc;
    return acc;
}

SequenceTable pb_series_oracle(PolyBernoulliKind kind, long k, int n_max) {
    const int N = n_max + 1;
    const UniSeries li = li_k_of_w(k, N);
    UniSeries den(N);
    if (kind == PolyBernoulliKind::B) {
        den = sub(UniSeries::constant(N, Rational(1)),
                  scale_var(elementary(Elementary::Exp, N), Rational(-1)));
    } else {
        den = sub(elementary(Elementary::Exp, N), UniSeries::constant(N, Rational(1)));
    }
    const UniSeries q = divide(li, den);
    SequenceTable t(kind == PolyBernoulliKind::B ? Family::B : Family::C, IndexVector{k});
    for (int n = 0; n <= n_max; ++n)
        t.set(n, q.egf_coeff(n), Route::SeriesOracle);
    return t;
}

VerifyReport pb_match_report(PolyBernoulliKind kind, long k_min, long k_max, int n_max) {
    VerifyReport rep("pb-explicit-vs-oracle-" + kind_name(kind));
    for (long k = k_min; k <= k_max; ++k) {
        const SequenceTable oracle = pb_series_oracle(kind, k, n_max);
        bool ok = true;
        std::string bad;
        for (int n = 0; n <= n_max; ++n) {
            const Rational ex = pb_explicit(kind, n, k);
            if (ex != oracle.value(n)) {
                ok = false;
                bad = "n=" + std::to_string(n) + ": " + ex.str() + " != " + oracle.value(n).str();
                break;
            }
        }
        rep.add(kind_name(kind) + " explicit vs oracle at k=" + std::to_string(k), ok, bad);
    }
    return rep;
}

VerifyReport pb_duality_report(PolyBernoulliKind kind, int n_max, int k_max) {
    VerifyReport rep("duality-" + kind_name(kind));
    const long shift = kind == PolyBernoulliKind::B ? 0 : 1;
    for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= k_max; ++k) {
            const Rational lhs = pb_explicit(kind, n, -(k + shift));
            const Rational rhs = pb_explicit(kind, k, -(n + shift));
            const bool ok = lhs == rhs;
            rep.add(kind_name(kind) + "(" + std::to_string(n) + ")^(" +
                        std::to_string(-(k + shift)) + ") == " + kind_name(kind) + "(" +
                        std::to_string(k) + ")^(" + std::to_string(-(n + shift)) + ")",
                    ok, ok ? lhs.str() : lhs.str() + " != " + rhs.str());
        }
    return rep;
}

BiSeries c_generating_grid(int order_x, int order_y) {
    const BiSeries ex = BiSeries::exponential(1, 0, order_x, order_y);
    const BiSeries ey = BiSeries::exponential(0, 1, order_x, order_y);
    const BiSeries exy = BiSeries::exponential(1, 1, order_x, order_y);
    const BiSeries den = ex + ey - exy;
    return bi_from_rational(exy, mul(den, den));
}

VerifyReport c_gf_check(int order) {
    VerifyReport rep("c-gf");
    const BiSeries grid = c_generating_grid(order, order);
    for (int n = 0; n <= order; ++n) {
        bool ok = true;
        std::string bad;
        for (int k = 0; k <= order; ++k) {
            const Rational lhs = grid.egf_coeff(n, k);
            const Rational rhs = pb_explicit(PolyBernoulliKind::C, n, -(k + 1));
            if (lhs != rhs) {
                ok = false;
                bad = "k=" + std::to_string(k) + ": " + lhs.str() + " != " + rhs.str();
                break;
            }
        }
        rep.add("C generating grid row n=" + std::to_string(n), ok, bad);
    }
    for (int n = 0; n <= order; ++n) {
        bool sym = true;
        for (int k = 0; k < n; ++k)
            if (grid.egf_coeff(n, k) != grid.egf_coeff(k, n))
                sym = false;
        rep.add("C grid symmetry row n=" + std::to_string(n), sym);
    }
    return rep;
}

} // namespace polycosec
