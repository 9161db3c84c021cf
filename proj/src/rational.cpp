#include "p4/rational.hpp"

namespace p4 {

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer superfactorial(long n) {
    Integer r = 1;
    for (long k = 2; k <= n; ++k) r *= factorial(static_cast<unsigned long>(k));
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw Error("zero raised to a negative power");
        return Rational(0);
    }
    Rational base = *this;
    if (e < 0) {
        base = Rational(1) / base;
        e = -e;
    }
    Rational r(1);
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

Rational Rational::parse(std::string_view s) {
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0)
        throw ParseError("bad rational literal: \"" + std::string(s) + "\"");
    if (sgn(q.get_den()) == 0) throw ParseError("rational literal with zero denominator");
    q.canonicalize();
    Rational r;
    r.v_ = q;
    return r;
}

} // namespace p4
