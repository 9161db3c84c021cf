#include "p4/field.hpp"

#include "p4/errors.hpp"

namespace p4 {

namespace {

enum VarIndex { A0 = 0, A1 = 1, F0 = 2, F1 = 3, F2 = 4, Gv = 5 };

MultiPoly mono_var(int i) { return MultiPoly::var(FieldElem::kVars, i); }

MultiPoly alpha_poly(int i) {
    i = ((i % 3) + 3) % 3;
    if (i == 0) return mono_var(A0);
    if (i == 1) return mono_var(A1);
    return MultiPoly::constant(FieldElem::kVars, Rational(3)) - mono_var(A0) - mono_var(A1);
}

MultiPoly f_poly(int i) { return mono_var(F0 + ((i % 3) + 3) % 3); }

MultiPoly x_poly() {
    return Rational(1, 3) * (f_poly(0) + f_poly(1) + f_poly(2));
}

// Images of the six generators under the derivation.
const std::array<MultiPoly, FieldElem::kVars>& derivation_table() {
    static const std::array<MultiPoly, FieldElem::kVars> table = [] {
        std::array<MultiPoly, FieldElem::kVars> t{
            MultiPoly(FieldElem::kVars), MultiPoly(FieldElem::kVars), MultiPoly(FieldElem::kVars),
            MultiPoly(FieldElem::kVars), MultiPoly(FieldElem::kVars), MultiPoly(FieldElem::kVars)};
        for (int i = 0; i < 3; ++i)
            t[static_cast<size_t>(F0 + i)] = alpha_poly(i) - f_poly(i) * (f_poly(i + 1) - f_poly(i + 2));
        MultiPoly s(FieldElem::kVars);
        const MultiPoly x = x_poly();
        for (int i = 0; i < 3; ++i) {
            MultiPoly d = f_poly(i) - x;
            s += d * d;
        }
        t[Gv] = Rational(-1, 2) * s;
        return t;
    }();
    return table;
}

MultiPoly derive_poly(const MultiPoly& p) {
    const auto& table = derivation_table();
    MultiPoly r(FieldElem::kVars);
    for (int i = 0; i < FieldElem::kVars; ++i) {
        MultiPoly dp = p.partial(i);
        if (!dp.is_zero()) r += dp * table[static_cast<size_t>(i)];
    }
    return r;
}

} // namespace

FieldElem::FieldElem(RationalFunction v) : v_(std::move(v)) {
    if (v_.nvars() != kVars) throw Error("field element must have six variables");
}

FieldElem FieldElem::constant(const Rational& c) {
    return FieldElem(RationalFunction::constant(kVars, c));
}

FieldElem FieldElem::alpha(int i) { return FieldElem(RationalFunction(alpha_poly(i))); }

FieldElem FieldElem::f(int i) { return FieldElem(RationalFunction(f_poly(i))); }

FieldElem FieldElem::g() { return FieldElem(RationalFunction(mono_var(Gv))); }

FieldElem FieldElem::x() { return FieldElem(RationalFunction(x_poly())); }

bool FieldElem::depends_on_g() const {
    return v_.num().max_exponent(Gv) > 0 || v_.den().max_exponent(Gv) > 0;
}

FieldElem FieldElem::derivative() const {
    const MultiPoly& num = v_.num();
    const MultiPoly& den = v_.den();
    MultiPoly dn = derive_poly(num);
    MultiPoly dd = derive_poly(den);
    return FieldElem(RationalFunction(dn * den - num * dd, den * den));
}

FieldElem FieldElem::pow(long e) const {
    FieldElem r = constant(Rational(1));
    FieldElem base = *this;
    if (e < 0) {
        base = constant(Rational(1)) / base;
        e = -e;
    }
    for (long i = 0; i < e; ++i) r = r * base;
    return r;
}

namespace {

UniRatFunc eval_poly_at(const MultiPoly& p, const std::array<Rational, 3>& alphas,
                        const std::array<UniRatFunc, 3>& f) {
    UniRatFunc r(Rational(0));
    for (const auto& [e, c] : p.terms()) {
        if (e[Gv] != 0) throw Error("cannot evaluate an element involving g at a concrete solution");
        Rational scalar = c * alphas[0].pow(e[A0]) * alphas[1].pow(e[A1]);
        UniRatFunc term(scalar);
        for (int i = 0; i < 3; ++i)
            if (e[static_cast<size_t>(F0 + i)] != 0)
                term *= f[static_cast<size_t>(i)].pow(e[static_cast<size_t>(F0 + i)]);
        r += term;
    }
    return r;
}

} // namespace

UniRatFunc eval_at_solution(const FieldElem& e, const std::array<Rational, 3>& alphas,
                            const std::array<UniRatFunc, 3>& f) {
    if ((alphas[0] + alphas[1] + alphas[2]) != Rational(3))
        throw Error("parameters must sum to 3");
    UniRatFunc den = eval_poly_at(e.value().den(), alphas, f);
    if (den.is_zero())
        throw SingularTransformError(
            "denominator vanishes identically on this solution; the transformation is singular there");
    UniRatFunc num = eval_poly_at(e.value().num(), alphas, f);
    return num / den;
}

} // namespace p4
