#pragma once

#include <utility>
#include <vector>

#include "p4/rational.hpp"

namespace p4 {

// Dense univariate polynomial over Rational.  Coefficients are stored
// lowest degree first; the leading coefficient is nonzero unless the
// polynomial is zero (empty coefficient vector).
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Rational& constant);
    UniPoly(long constant) : UniPoly(Rational(constant)) {}
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly x() { return monomial(Rational(1), 1); }
    static UniPoly monomial(const Rational& c, int k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const Rational& coeff(int k) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_monic() const { return !is_zero() && leading().is_one(); }
    bool has_integer_coeffs() const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& c, const UniPoly& p);

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly derivative() const;
    Rational eval(const Rational& x) const;
    UniPoly pow(unsigned e) const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Raised by exact_divide when the division leaves a remainder.
class DivisionError : public Error {
public:
    DivisionError(std::string msg, UniPoly remainder)
        : Error(std::move(msg)), remainder(std::move(remainder)) {}
    UniPoly remainder;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Quotient of an exact division; throws DivisionError if b does not divide a.
UniPoly exact_divide(const UniPoly& a, const UniPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// Quotient of univariate polynomials, kept fully reduced: gcd(num, den) = 1
// and den monic.  Zero is 0/1.
class UniRatFunc {
public:
    UniRatFunc() : num_(), den_(Rational(1)) {}
    UniRatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
    UniRatFunc(long c) : num_(Rational(c)), den_(Rational(1)) {}
    UniRatFunc(const UniPoly& p) : num_(p), den_(Rational(1)) {}
    UniRatFunc(UniPoly num, UniPoly den);

    static UniRatFunc x() { return UniRatFunc(UniPoly::x()); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    UniRatFunc operator-() const;
    UniRatFunc& operator+=(const UniRatFunc& o);
    UniRatFunc& operator-=(const UniRatFunc& o);
    UniRatFunc& operator*=(const UniRatFunc& o);
    UniRatFunc& operator/=(const UniRatFunc& o);
    friend UniRatFunc operator+(UniRatFunc a, const UniRatFunc& b) { return a += b; }
    friend UniRatFunc operator-(UniRatFunc a, const UniRatFunc& b) { return a -= b; }
    friend UniRatFunc operator*(UniRatFunc a, const UniRatFunc& b) { return a *= b; }
    friend UniRatFunc operator/(UniRatFunc a, const UniRatFunc& b) { return a /= b; }

    // Canonical form makes structural equality exact equality.
    friend bool operator==(const UniRatFunc& a, const UniRatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const UniRatFunc& a, const UniRatFunc& b) { return !(a == b); }

    UniRatFunc derivative() const;
    UniRatFunc pow(long e) const;

private:
    void normalize();
    UniPoly num_, den_;
};

} // namespace p4
