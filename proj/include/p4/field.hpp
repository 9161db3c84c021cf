#pragma once

#include <array>

#include "p4/multipoly.hpp"
#include "p4/unipoly.hpp"

namespace p4 {

// Element of the differential field in alpha_0, alpha_1, f_0, f_1, f_2 and
// the auxiliary integral g.  alpha_2 is not an independent symbol: it is
// always represented as 3 - alpha_0 - alpha_1, and the independent variable
// is x = (f_0 + f_1 + f_2)/3.  The built-in derivation acts by
//   alpha_i' = 0,   f_i' = alpha_i - f_i (f_{i+1} - f_{i+2}),
//   g' = -(1/2) sum_i (f_i - x)^2,
// extended to quotients by the quotient rule; in particular x' = 1.
class FieldElem {
public:
    static constexpr int kVars = 6; // a0, a1, f0, f1, f2, g

    FieldElem() : v_(RationalFunction::constant(kVars, Rational(0))) {}
    explicit FieldElem(RationalFunction v);

    static FieldElem constant(const Rational& c);
    static FieldElem alpha(int i); // index mod 3; alpha(2) = 3 - a0 - a1
    static FieldElem f(int i);     // index mod 3
    static FieldElem g();
    static FieldElem x();

    const RationalFunction& value() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }
    bool depends_on_g() const;

    FieldElem operator-() const { return FieldElem(-v_); }
    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) { return FieldElem(a.v_ + b.v_); }
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return FieldElem(a.v_ - b.v_); }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) { return FieldElem(a.v_ * b.v_); }
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return FieldElem(a.v_ / b.v_); }
    friend FieldElem operator*(const Rational& c, const FieldElem& e) {
        return FieldElem(RationalFunction::constant(kVars, c) * e.v_);
    }

    FieldElem derivative() const;
    FieldElem pow(long e) const;

    // Field equality, decided by cross-multiplication.
    friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.v_ == b.v_; }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

private:
    RationalFunction v_;
};

// Evaluate at a concrete triple: alpha_i numeric, f_i rational functions of x.
// The element must not involve g.  Throws SingularTransformError when a
// denominator vanishes identically at the given data.
UniRatFunc eval_at_solution(const FieldElem& e, const std::array<Rational, 3>& alphas,
                            const std::array<UniRatFunc, 3>& f);

} // namespace p4
