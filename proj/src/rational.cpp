#include "polycosec/rational.hpp"

#include <ostream>

namespace polycosec {

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0)
        throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::parse(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    if (slash != std::string::npos && text.find('/', slash + 1) != std::string::npos)
        throw std::invalid_argument("malformed rational literal: " + text);
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);
    if (sgn(mpz_class(q.get_den())) == 0)
        throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    Rational r;
    r.v_ = q;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer())
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational int_pow(long base, long exp) {
    if (exp >= 0) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), std::abs(base), static_cast<unsigned long>(exp));
        if (base < 0 && (exp % 2) != 0)
            p = -p;
        return Rational(p);
    }
    if (base == 0)
        throw std::domain_error("0 raised to a negative power");
    Rational p = int_pow(base, -exp);
    return Rational(1) / p;
}

Rational pow(const Rational& r, long exp) {
    if (exp < 0) {
        if (r.is_zero())
            throw std::domain_error("0 raised to a negative power");
        return Rational(1) / pow(r, -exp);
    }
    Integer pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), r.num().get_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(pd.get_mpz_t(), r.den().get_mpz_t(), static_cast<unsigned long>(exp));
    return Rational(pn, pd);
}

} // namespace polycosec
