#include "polycosec/uniseries.hpp"

#include "polycosec/combinatorics.hpp"

#include <algorithm>

namespace polycosec {

namespace {

int check_order(int order) {
    if (order < 0)
        throw std::invalid_argument("series order must be nonnegative");
    return order;
}

} // namespace

UniSeries::UniSeries(int order) : coeffs_(static_cast<std::size_t>(check_order(order)) + 1) {}

UniSeries::UniSeries(int order, std::vector<Rational> coeffs) : UniSeries(order) {
    if (coeffs.size() != coeffs_.size())
        throw std::invalid_argument("coefficient count does not match series order");
    coeffs_ = std::move(coeffs);
}

UniSeries UniSeries::constant(int order, const Rational& c) {
    UniSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

UniSeries UniSeries::monomial(int order, int exp, const Rational& c) {
    UniSeries s(order);
    if (exp < 0 || exp > order)
        throw std::invalid_argument("monomial exponent outside retained range");
    s.coeffs_[static_cast<std::size_t>(exp)] = c;
    return s;
}

int UniSeries::valuation() const {
    for (int i = 0; i <= order(); ++i)
        if (!coeffs_[static_cast<std::size_t>(i)].is_zero())
            return i;
    return order() + 1;
}

Rational UniSeries::egf_coeff(int n) const {
    return Rational(factorial(n)) * coeff(n);
}

UniSeries add(const UniSeries& f, const UniSeries& g) {
    const int n = std::min(f.order(), g.order());
    UniSeries h(n);
    for (int i = 0; i <= n; ++i)
        h.set_coeff(i, f.coeff(i) + g.coeff(i));
    return h;
}

UniSeries sub(const UniSeries& f, const UniSeries& g) {
    const int n = std::min(f.order(), g.order());
    UniSeries h(n);
    for (int i = 0; i <= n; ++i)
        h.set_coeff(i, f.coeff(i) - g.coeff(i));
    return h;
}

UniSeries mul(const UniSeries& f, const UniSeries& g) {
    const int n = std::min(f.order(), g.order());
    UniSeries h(n);
    for (int i = 0; i <= n; ++i) {
        if (f.coeff(i).is_zero())
            continue;
        for (int j = 0; i + j <= n; ++j) {
            if (g.coeff(j).is_zero())
                continue;
            h.set_coeff(i + j, h.coeff(i + j) + f.coeff(i) * g.coeff(j));
        }
    }
    return h;
}

UniSeries scale(const UniSeries& f, const Rational& c) {
    UniSeries h(f.order());
    for (int i = 0; i <= f.order(); ++i)
        h.set_coeff(i, f.coeff(i) * c);
    return h;
}

UniSeries negate(const UniSeries& f) {
    return scale(f, Rational(-1));
}

UniSeries truncate(const UniSeries& f, int order) {
    if (order > f.order())
        throw std::invalid_argument("truncation cannot raise the order");
    UniSeries h(order);
    for (int i = 0; i <= order; ++i)
        h.set_coeff(i, f.coeff(i));
    return h;
}

UniSeries scale_var(const UniSeries& f, const Rational& c) {
    UniSeries h(f.order());
    Rational p(1);
    for (int i = 0; i <= f.order(); ++i) {
        h.set_coeff(i, f.coeff(i) * p);
        p *= c;
    }
    return h;
}

UniSeries divide(const UniSeries& f, const UniSeries& g) {
    const int vg = g.valuation();
    if (vg > g.order())
        throw DivisionByNonUnit("series division by zero series");
    if (f.valuation() < vg)
        throw DivisionByNonUnit("dividend valuation below divisor valuation");
    const int n = std::min(f.order(), g.order()) - vg;
    UniSeries h(n);
    const Rational& lead = g.coeff(vg);
    for (int i = 0; i <= n; ++i) {
        Rational acc = (i + vg <= f.order()) ? f.coeff(i + vg) : Rational(0);
        for (int j = 0; j < i; ++j)
            acc -= h.coeff(j) * g.coeff(i - j + vg);
        h.set_coeff(i, acc / lead);
    }
    return h;
}

UniSeries compose(const UniSeries& f, const UniSeries& g) {
    if (!g.coeff(0).is_zero())
        throw CompositionAtUnit("inner series has a nonzero constant term");
    const int n = std::min(f.order(), g.order());
    const UniSeries inner = truncate(g, n);
    UniSeries acc(n);
    for (int j = n; j >= 0; --j) {
        acc = mul(acc, inner);
        acc.set_coeff(0, acc.coeff(0) + f.coeff(j));
    }
    return acc;
}

UniSeries differentiate(const UniSeries& f) {
    const int n = std::max(f.order() - 1, 0);
    UniSeries h(n);
    for (int i = 0; i + 1 <= f.order(); ++i)
        h.set_coeff(i, Rational(i + 1) * f.coeff(i + 1));
    return h;
}

UniSeries elementary(Elementary fn, int order) {
    check_order(order);
    UniSeries s(order);
    switch (fn) {
    case Elementary::Exp:
        for (int i = 0; i <= order; ++i)
            s.set_coeff(i, Rational(Integer(1), factorial(i)));
        return s;
    case Elementary::Sinh:
        for (int i = 1; i <= order; i += 2)
            s.set_coeff(i, Rational(Integer(1), factorial(i)));
        return s;
    case Elementary::Cosh:
        for (int i = 0; i <= order; i += 2)
            s.set_coeff(i, Rational(Integer(1), factorial(i)));
        return s;
    case Elementary::Tanh:
        return divide(elementary(Elementary::Sinh, order),
                      elementary(Elementary::Cosh, order));
    }
    throw std::invalid_argument("unknown elementary series");
}

UniSeries a_series(long k, int order) {
    check_order(order);
    UniSeries s(order);
    for (int e = 1; e <= order; e += 2)
        s.set_coeff(e, Rational(2) * int_pow(e, -k));
    return s;
}

UniSeries a_multi_series(const IndexVector& k, int order) {
    check_order(order);
    const std::size_t r = k.depth();
    // layer[m] = sum over admissible tuples ending at m_i = m of the
    // reciprocal weight product; build layer by layer over the depth.
    std::vector<Rational> layer(static_cast<std::size_t>(order) + 1);
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Rational> next(layer.size());
        Rational below;                 // sum of layer[m'] for m' < m
        for (int m = 1; m <= order; ++m) {
            below += layer[static_cast<std::size_t>(m - 1)];
            if ((m % 2) != (static_cast<int>(i + 1) % 2))
                continue;
            const Rational prefix = (i == 0) ? Rational(1) : below;
            if (prefix.is_zero())
                continue;
            next[static_cast<std::size_t>(m)] = prefix * int_pow(m, -k[i]);
        }
        layer = std::move(next);
    }
    UniSeries s(order);
    const Rational weight = int_pow(2, static_cast<long>(r));
    for (int m = 1; m <= order; ++m)
        s.set_coeff(m, weight * layer[static_cast<std::size_t>(m)]);
    return s;
}

} // namespace polycosec
