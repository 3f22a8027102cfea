#pragma once

#include "polycosec/rational.hpp"
#include "polycosec/uniseries.hpp"

#include <vector>

namespace polycosec {

/// Truncated bivariate formal power series over Rational on the rectangular
/// grid of exponents (0..order_x) x (0..order_y).
class BiSeries {
public:
    BiSeries(int order_x, int order_y);

    static BiSeries constant(int order_x, int order_y, const Rational& c);

    // Series of e^(cx*x + cy*y): coefficient (i,j) = cx^i cy^j / (i! j!).
    static BiSeries exponential(long cx, long cy, int order_x, int order_y);

    // Embed a univariate series as a series in x (resp. y).
    static BiSeries from_x(const UniSeries& f, int order_y);
    static BiSeries from_y(const UniSeries& f, int order_x);

    int order_x() const { return order_x_; }
    int order_y() const { return order_y_; }
    const Rational& coeff(int a, int b) const { return grid_[index(a, b)]; }
    void set_coeff(int a, int b, Rational c) { grid_[index(a, b)] = std::move(c); }

    // a! * b! * coeff(a,b): the x^a/a! y^b/b! basis reading of entry (a,b).
    Rational egf_coeff(int a, int b) const;

    // Series in x formed by the coefficients of y^b (each still divided by a!).
    UniSeries row_y(int b) const;

    bool operator==(const BiSeries&) const = default;

private:
    std::size_t index(int a, int b) const;

    int order_x_;
    int order_y_;
    std::vector<Rational> grid_;
};

BiSeries add(const BiSeries& f, const BiSeries& g);
BiSeries sub(const BiSeries& f, const BiSeries& g);
BiSeries mul(const BiSeries& f, const BiSeries& g);
BiSeries scale(const BiSeries& f, const Rational& c);

inline BiSeries operator+(const BiSeries& f, const BiSeries& g) { return add(f, g); }
inline BiSeries operator-(const BiSeries& f, const BiSeries& g) { return sub(f, g); }
inline BiSeries operator*(const BiSeries& f, const BiSeries& g) { return mul(f, g); }

BiSeries truncate(const BiSeries& f, int order_x, int order_y);

// Substitute x -> sx*x, y -> sy*y.
BiSeries scale_vars(const BiSeries& f, const Rational& sx, const Rational& sy);

// Grid-truncated quotient; den must have a nonzero constant term.
BiSeries bi_from_rational(const BiSeries& num, const BiSeries& den);

// Formal partial derivatives; the order drops by one in that variable.
BiSeries differentiate_x(const BiSeries& f);
BiSeries differentiate_y(const BiSeries& f);

} // namespace polycosec
