#pragma once

#include <map>
#include <span>
#include <vector>

#include "p4/rational.hpp"
#include "p4/unipoly.hpp"

namespace p4 {

using ExpVec = std::vector<int>;

// Graded lexicographic order: lower total degree first, ties broken
// lexicographically.  This is the canonical term order of the library.
struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Sparse multivariate polynomial over Rational in variables t_1 .. t_N.
// No zero coefficients are stored; all exponent vectors have length N.
class MultiPoly {
public:
    using TermMap = std::map<ExpVec, Rational, GradedLexLess>;

    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}
    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly var(int nvars, int i); // 0-based index

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const ExpVec& e) const;
    int max_exponent(int i) const;

    // Degree where variable t_k carries weight k.
    long weighted_degree() const;
    bool is_weight_homogeneous() const;

    void add_term(const ExpVec& e, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& c, const MultiPoly& p);

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly partial(int i) const; // d/dt_{i+1}
    // Same polynomial viewed in nvars >= current count.
    MultiPoly extended(int nvars) const;
    // Substitute t_1 = x, t_2 = c, t_k = 0 for k >= 3.
    UniPoly substitute_x_c(const Rational& c) const;
    // Leading coefficient under the canonical term order.
    const Rational& leading() const;

private:
    int nvars_;
    TermMap terms_;
};

// Quotient of multivariate polynomials.  The denominator is nonzero and
// scaled so its leading coefficient under the canonical term order is 1.
// Equality is decided by cross-multiplication; no multivariate gcd is taken.
class RationalFunction {
public:
    RationalFunction() : num_(0), den_(MultiPoly::constant(0, Rational(1))) {}
    explicit RationalFunction(MultiPoly num);
    RationalFunction(MultiPoly num, MultiPoly den);

    static RationalFunction constant(int nvars, const Rational& c);
    static RationalFunction var(int nvars, int i);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    bool equals(const RationalFunction& o) const;
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) { return a.equals(b); }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !a.equals(b); }

private:
    void normalize();
    MultiPoly num_, den_;
};

// Evaluate p with each variable replaced by the given rational function.
RationalFunction substitute(const MultiPoly& p, std::span<const RationalFunction> images);
RationalFunction substitute(const RationalFunction& r, std::span<const RationalFunction> images);

} // namespace p4
