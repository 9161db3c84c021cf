#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "p4/errors.hpp"

namespace p4 {

using Integer = mpz_class;

Integer factorial(unsigned long n);
// n^! = n! (n-1)! ... 2! 1!, with n^! = 1 for n <= 0 (empty product).
Integer superfactorial(long n);
Integer binomial(unsigned long n, unsigned long k);
Integer pow(const Integer& base, unsigned long e);

// Exact rational number. Always canonical: gcd(|num|, den) = 1, den > 0,
// zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(long num, long den);
    Rational(const Integer& num, const Integer& den);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational pow(long e) const;

    // "p/q", or just "p" when q = 1.  This is the serialization contract.
    std::string str() const { return v_.get_str(); }
    static Rational parse(std::string_view s);

private:
    mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

} // namespace p4
