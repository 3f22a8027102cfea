#include "polycosec/biseries.hpp"

#include "polycosec/combinatorics.hpp"

#include <algorithm>

namespace polycosec {

BiSeries::BiSeries(int order_x, int order_y) : order_x_(order_x), order_y_(order_y) {
    if (order_x < 0 || order_y < 0)
        throw std::invalid_argument("series order must be nonnegative");
    grid_.resize(static_cast<std::size_t>(order_x + 1) * static_cast<std::size_t>(order_y + 1));
}

std::size_t BiSeries::index(int a, int b) const {
    if (a < 0 || a > order_x_ || b < 0 || b > order_y_)
        throw std::out_of_range("bivariate coefficient outside retained grid");
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(order_y_ + 1) +
           static_cast<std::size_t>(b);
}

BiSeries BiSeries::constant(int order_x, int order_y, const Rational& c) {
    BiSeries s(order_x, order_y);
    s.set_coeff(0, 0, c);
    return s;
}

BiSeries BiSeries::exponential(long cx, long cy, int order_x, int order_y) {
    BiSeries s(order_x, order_y);
    Rational px(1);
    for (int a = 0; a <= order_x; ++a) {
        Rational py(1);
        for (int b = 0; b <= order_y; ++b) {
            s.set_coeff(a, b, px * py * Rational(Integer(1), factorial(a) * factorial(b)));
            py *= Rational(cy);
        }
        px *= Rational(cx);
    }
    return s;
}

BiSeries BiSeries::from_x(const UniSeries& f, int order_y) {
    BiSeries s(f.order(), order_y);
    for (int a = 0; a <= f.order(); ++a)
        s.set_coeff(a, 0, f.coeff(a));
    return s;
}

BiSeries BiSeries::from_y(const UniSeries& f, int order_x) {
    BiSeries s(order_x, f.order());
    for (int b = 0; b <= f.order(); ++b)
        s.set_coeff(0, b, f.coeff(b));
    return s;
}

Rational BiSeries::egf_coeff(int a, int b) const {
    return Rational(factorial(a) * factorial(b)) * coeff(a, b);
}

UniSeries BiSeries::row_y(int b) const {
    UniSeries row(order_x_);
    for (int a = 0; a <= order_x_; ++a)
        row.set_coeff(a, coeff(a, b));
    return row;
}

BiSeries add(const BiSeries& f, const BiSeries& g) {
    const int nx = std::min(f.order_x(), g.order_x());
    const int ny = std::min(f.order_y(), g.order_y());
    BiSeries h(nx, ny);
    for (int a = 0; a <= nx; ++a)
        for (int b = 0; b <= ny; ++b)
            h.set_coeff(a, b, f.coeff(a, b) + g.coeff(a, b));
    return h;
}

BiSeries sub(const BiSeries& f, const BiSeries& g) {
    const int nx = std::min(f.order_x(), g.order_x());
    const int ny = std::min(f.order_y(), g.order_y());
    BiSeries h(nx, ny);
    for (int a = 0; a <= nx; ++a)
        for (int b = 0; b <= ny; ++b)
            h.set_coeff(a, b, f.coeff(a, b) - g.coeff(a, b));
    return h;
}

BiSeries mul(const BiSeries& f, const BiSeries& g) {
    const int nx = std::min(f.order_x(), g.order_x());
    const int ny = std::min(f.order_y(), g.order_y());
    BiSeries h(nx, ny);
    for (int a = 0; a <= nx; ++a)
        for (int b = 0; b <= ny; ++b) {
            const Rational& fc = f.coeff(a, b);
            if (fc.is_zero())
                continue;
            for (int c = 0; a + c <= nx; ++c)
                for (int d = 0; b + d <= ny; ++d) {
                    const Rational& gc = g.coeff(c, d);
                    if (gc.is_zero())
                        continue;
                    h.set_coeff(a + c, b + d, h.coeff(a + c, b + d) + fc * gc);
                }
        }
    return h;
}

BiSeries scale(const BiSeries& f, const Rational& c) {
    BiSeries h(f.order_x(), f.order_y());
    for (int a = 0; a <= f.order_x(); ++a)
        for (int b = 0; b <= f.order_y(); ++b)
            h.set_coeff(a, b, f.coeff(a, b) * c);
    return h;
}

BiSeries truncate(const BiSeries& f, int order_x, int order_y) {
    if (order_x > f.order_x() || order_y > f.order_y())
        throw std::invalid_argument("truncation cannot raise the order");
    BiSeries h(order_x, order_y);
    for (int a = 0; a <= order_x; ++a)
        for (int b = 0; b <= order_y; ++b)
            h.set_coeff(a, b, f.coeff(a, b));
    return h;
}

BiSeries scale_vars(const BiSeries& f, const Rational& sx, const Rational& sy) {
    BiSeries h(f.order_x(), f.order_y());
    Rational px(1);
    for (int a = 0; a <= f.order_x(); ++a) {
        Rational py(1);
        for (int b = 0; b <= f.order_y(); ++b) {
            h.set_coeff(a, b, f.coeff(a, b) * px * py);
            py *= sy;
        }
        px *= sx;
    }
    return h;
}

BiSeries bi_from_rational(const BiSeries& num, const BiSeries& den) {
    if (den.coeff(0, 0).is_zero())
        throw DivisionByNonUnit("bivariate divisor has zero constant term");
    const int nx = std::min(num.order_x(), den.order_x());
    const int ny = std::min(num.order_y(), den.order_y());
    const Rational& lead = den.coeff(0, 0);
    BiSeries h(nx, ny);
    for (int a = 0; a <= nx; ++a)
        for (int b = 0; b <= ny; ++b) {
            Rational acc = num.coeff(a, b);
            for (int c = 0; c <= a; ++c)
                for (int d = 0; d <= b; ++d) {
                    if (c == a && d == b)
                        continue;
                    const Rational& dc = den.coeff(a - c, b - d);
                    if (dc.is_zero())
                        continue;
                    acc -= h.coeff(c, d) * dc;
                }
            h.set_coeff(a, b, acc / lead);
        }
    return h;
}

BiSeries differentiate_x(const BiSeries& f) {
    const int nx = std::max(f.order_x() - 1, 0);
    BiSeries h(nx, f.order_y());
    for (int a = 0; a + 1 <= f.order_x(); ++a)
        for (int b = 0; b <= f.order_y(); ++b)
            h.set_coeff(a, b, Rational(a + 1) * f.coeff(a + 1, b));
    return h;
}

BiSeries differentiate_y(const BiSeries& f) {
    const int ny = std::max(f.order_y() - 1, 0);
    BiSeries h(f.order_x(), ny);
    for (int a = 0; a <= f.order_x(); ++a)
        for (int b = 0; b + 1 <= f.order_y(); ++b)
            h.set_coeff(a, b, Rational(b + 1) * f.coeff(a, b + 1));
    return h;
}

} // namespace polycosec
