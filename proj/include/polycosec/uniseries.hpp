#pragma once

#include "polycosec/index_vector.hpp"
#include "polycosec/rational.hpp"

#include <stdexcept>
#include <vector>

namespace polycosec {

class SeriesError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Quotient request whose denominator is not invertible within the truncation.
class DivisionByNonUnit : public SeriesError {
    using SeriesError::SeriesError;
};

/// Composition with an inner series that has a nonzero constant term.
class CompositionAtUnit : public SeriesError {
    using SeriesError::SeriesError;
};

/// Truncated formal power series over Rational; coefficients kept for
/// exponents 0..order(). Operations on mixed orders truncate to the smaller.
class UniSeries {
public:
    explicit UniSeries(int order);
    UniSeries(int order, std::vector<Rational> coeffs);

    static UniSeries constant(int order, const Rational& c);
    static UniSeries monomial(int order, int exp, const Rational& c = Rational(1));

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    void set_coeff(int i, Rational c) { coeffs_.at(static_cast<std::size_t>(i)) = std::move(c); }

    // Smallest exponent with a nonzero coefficient; order()+1 when all vanish.
    int valuation() const;

    // n! * coeff(n): the exponential-generating-function reading of entry n.
    Rational egf_coeff(int n) const;

    bool operator==(const UniSeries&) const = default;

private:
    std::vector<Rational> coeffs_;
};

UniSeries add(const UniSeries& f, const UniSeries& g);
UniSeries sub(const UniSeries& f, const UniSeries& g);
UniSeries mul(const UniSeries& f, const UniSeries& g);
UniSeries scale(const UniSeries& f, const Rational& c);
UniSeries negate(const UniSeries& f);

inline UniSeries operator+(const UniSeries& f, const UniSeries& g) { return add(f, g); }
inline UniSeries operator-(const UniSeries& f, const UniSeries& g) { return sub(f, g); }
inline UniSeries operator*(const UniSeries& f, const UniSeries& g) { return mul(f, g); }
inline UniSeries operator*(const UniSeries& f, const Rational& c) { return scale(f, c); }
inline UniSeries operator*(const Rational& c, const UniSeries& f) { return scale(f, c); }
inline UniSeries operator-(const UniSeries& f) { return negate(f); }

// Drop to a smaller (or equal) order.
UniSeries truncate(const UniSeries& f, int order);

// Substitute t -> c*t.
UniSeries scale_var(const UniSeries& f, const Rational& c);

// Exact quotient h with h*g = f up to truncation. Requires
// valuation(g) <= valuation(f) and a nonzero leading retained coefficient
// of g; the quotient order is reduced by valuation(g).
UniSeries divide(const UniSeries& f, const UniSeries& g);

// f(g(t)) for g with zero constant term, truncated at the smaller order.
UniSeries compose(const UniSeries& f, const UniSeries& g);

// Formal derivative; the order drops by one (an order-0 input yields the
// order-0 zero series).
UniSeries differentiate(const UniSeries& f);

enum class Elementary { Exp, Sinh, Cosh, Tanh };

UniSeries elementary(Elementary fn, int order);

// 2 * sum z^(2n+1) / (2n+1)^k over 2n+1 <= order; negative k turns the
// weight into the integer multiplier (2n+1)^|k|.
UniSeries a_series(long k, int order);

// 2^r * sum over 0 < m_1 < ... < m_r <= order with m_i == i (mod 2) of
// z^(m_r) / (m_1^(k_1) ... m_r^(k_r)). Reduces to a_series for depth 1.
UniSeries a_multi_series(const IndexVector& k, int order);

} // namespace polycosec
