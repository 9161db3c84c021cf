#include "p4/weyl.hpp"

#include <cctype>
#include <sstream>

#include "p4/errors.hpp"

namespace p4 {

namespace {

enum VarIndex { A0 = 0, A1 = 1, F0 = 2, F1 = 3, F2 = 4, Gv = 5 };

RationalFunction rf_var(int i) { return RationalFunction::var(FieldElem::kVars, i); }

RationalFunction rf_alpha(int i) {
    i = ((i % 3) + 3) % 3;
    if (i < 2) return rf_var(A0 + i);
    return RationalFunction::constant(FieldElem::kVars, Rational(3)) - rf_var(A0) - rf_var(A1);
}

RationalFunction rf_f(int i) { return rf_var(F0 + ((i % 3) + 3) % 3); }

WeylImages identity_images() {
    WeylImages im{rf_var(A0), rf_var(A1), rf_var(F0), rf_var(F1), rf_var(F2), rf_var(Gv)};
    return im;
}

// Reflection s_i: alpha_i -> -alpha_i, alpha_j -> alpha_j + alpha_i,
// f_i fixed, f_{i+1} -> f_{i+1} - alpha_i/f_i, f_{i+2} -> f_{i+2} + alpha_i/f_i,
// g -> g + alpha_i/f_i.
WeylImages reflection_images(int i) {
    WeylImages im = identity_images();
    const RationalFunction ai = rf_alpha(i);
    const RationalFunction step = ai / rf_f(i);
    auto fslot = [](int j) { return F0 + ((j % 3) + 3) % 3; };
    im[static_cast<size_t>(fslot(i + 1))] = rf_f(i + 1) - step;
    im[static_cast<size_t>(fslot(i + 2))] = rf_f(i + 2) + step;
    im[Gv] = rf_var(Gv) + step;
    if (i == 0) {
        im[A0] = -rf_var(A0);
        im[A1] = rf_var(A1) + rf_var(A0);
    } else if (i == 1) {
        im[A0] = rf_var(A0) + rf_var(A1);
        im[A1] = -rf_var(A1);
    } else {
        im[A0] = rf_var(A0) + rf_alpha(2);
        im[A1] = rf_var(A1) + rf_alpha(2);
    }
    return im;
}

WeylImages rotation_images(bool inverse) {
    WeylImages im = identity_images();
    if (!inverse) {
        im[A0] = rf_var(A1);
        im[A1] = rf_alpha(2);
        im[F0] = rf_var(F1);
        im[F1] = rf_var(F2);
        im[F2] = rf_var(F0);
    } else {
        im[A0] = rf_alpha(2);
        im[A1] = rf_var(A0);
        im[F0] = rf_var(F2);
        im[F1] = rf_var(F0);
        im[F2] = rf_var(F1);
    }
    return im;
}

} // namespace

std::string letter_name(WeylLetter l) {
    switch (l) {
    case WeylLetter::S0: return "s0";
    case WeylLetter::S1: return "s1";
    case WeylLetter::S2: return "s2";
    case WeylLetter::Pi: return "pi";
    case WeylLetter::PiInv: return "pi^-1";
    }
    return "?";
}

WeylLetter letter_inverse(WeylLetter l) {
    switch (l) {
    case WeylLetter::Pi: return WeylLetter::PiInv;
    case WeylLetter::PiInv: return WeylLetter::Pi;
    default: return l; // reflections are involutions
    }
}

const WeylImages& letter_images(WeylLetter l) {
    static const WeylImages s0 = reflection_images(0);
    static const WeylImages s1 = reflection_images(1);
    static const WeylImages s2 = reflection_images(2);
    static const WeylImages pi = rotation_images(false);
    static const WeylImages piinv = rotation_images(true);
    switch (l) {
    case WeylLetter::S0: return s0;
    case WeylLetter::S1: return s1;
    case WeylLetter::S2: return s2;
    case WeylLetter::Pi: return pi;
    case WeylLetter::PiInv: return piinv;
    }
    throw Error("unknown letter");
}

FieldElem apply_letter(WeylLetter l, const FieldElem& e) {
    const WeylImages& im = letter_images(l);
    return FieldElem(substitute(e.value(), std::span<const RationalFunction>(im.data(), im.size())));
}

FieldElem weyl_apply(const WeylWord& w, const FieldElem& e) {
    FieldElem cur = e;
    for (size_t i = w.letters.size(); i-- > 0;) cur = apply_letter(w.letters[i], cur);
    return cur;
}

std::array<FieldElem, 3> weyl_apply_alphas(const WeylWord& w) {
    return {weyl_apply(w, FieldElem::alpha(0)), weyl_apply(w, FieldElem::alpha(1)),
            weyl_apply(w, FieldElem::alpha(2))};
}

WeylWord WeylWord::parse(std::string_view text) {
    WeylWord w;
    std::istringstream is{std::string(text)};
    std::string tok;
    while (is >> tok) {
        std::string base = tok;
        long power = 1;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            base = tok.substr(0, caret);
            std::string exp = tok.substr(caret + 1);
            try {
                size_t used = 0;
                power = std::stol(exp, &used);
                if (used != exp.size()) throw std::invalid_argument(exp);
            } catch (const std::exception&) {
                throw ParseError("bad exponent in word token \"" + tok + "\"");
            }
        }
        std::vector<WeylLetter> unit;
        if (base == "s0") unit = {WeylLetter::S0};
        else if (base == "s1") unit = {WeylLetter::S1};
        else if (base == "s2") unit = {WeylLetter::S2};
        else if (base == "pi") unit = {WeylLetter::Pi};
        else if (base == "T1" || base == "t1") unit = {WeylLetter::Pi, WeylLetter::S2, WeylLetter::S1};
        else if (base == "T2" || base == "t2") unit = {WeylLetter::S1, WeylLetter::Pi, WeylLetter::S2};
        else throw ParseError("unknown word token \"" + tok + "\"");

        if (power < 0) {
            std::vector<WeylLetter> inv(unit.rbegin(), unit.rend());
            for (auto& l : inv) l = letter_inverse(l);
            unit = std::move(inv);
            power = -power;
        }
        for (long k = 0; k < power; ++k) w.letters.insert(w.letters.end(), unit.begin(), unit.end());
    }
    return w;
}

std::string WeylWord::str() const {
    std::string s;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) s += ' ';
        s += letter_name(letters[i]);
    }
    return s;
}

WeylWord WeylWord::inverse() const {
    WeylWord w;
    w.letters.assign(letters.rbegin(), letters.rend());
    for (auto& l : w.letters) l = letter_inverse(l);
    return w;
}

WeylWord WeylWord::operator*(const WeylWord& o) const {
    WeylWord w = *this;
    w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
    return w;
}

VPoint::VPoint(Rational a, Rational b, Rational c) : v1(a), v2(b), v3(c) {
    if (!(v1 + v2 + v3).is_zero()) throw Error("v-coordinates must sum to zero");
}

std::string VPoint::str() const {
    return "(" + v1.str() + ", " + v2.str() + ", " + v3.str() + ")";
}

namespace {

VPoint apply_letter_v(WeylLetter l, const VPoint& v) {
    const Rational third(1, 3);
    switch (l) {
    case WeylLetter::S0: return VPoint(v.v3 + Rational(1), v.v2, v.v1 - Rational(1));
    case WeylLetter::S1: return VPoint(v.v2, v.v1, v.v3);
    case WeylLetter::S2: return VPoint(v.v1, v.v3, v.v2);
    case WeylLetter::Pi: return VPoint(v.v3 + Rational(2) * third, v.v1 - third, v.v2 - third);
    case WeylLetter::PiInv: return VPoint(v.v2 + third, v.v3 + third, v.v1 - Rational(2) * third);
    }
    throw Error("unknown letter");
}

} // namespace

VPoint weyl_apply_v(const WeylWord& w, const VPoint& v) {
    VPoint cur = v;
    for (size_t i = w.letters.size(); i-- > 0;) cur = apply_letter_v(w.letters[i], cur);
    return cur;
}

std::array<Rational, 3> params_v_to_alpha(const VPoint& v) {
    return {Rational(3) * (Rational(1) - v.v1 + v.v3), Rational(3) * (v.v1 - v.v2),
            Rational(3) * (v.v2 - v.v3)};
}

VPoint params_alpha_to_v(const std::array<Rational, 3>& alpha) {
    if (alpha[0] + alpha[1] + alpha[2] != Rational(3)) throw Error("parameters must sum to 3");
    Rational v2 = (alpha[2] - alpha[1]) / Rational(9);
    Rational v1 = v2 + alpha[1] / Rational(3);
    Rational v3 = v2 - alpha[2] / Rational(3);
    return VPoint(v1, v2, v3);
}

std::pair<Rational, Rational> params_alpha_to_ab(const std::array<Rational, 3>& alpha) {
    VPoint v = params_alpha_to_v(alpha);
    Rational a = Rational(1) + Rational(3) * v.v3;
    Rational diff = v.v1 - v.v2;
    return {a, Rational(-2) * diff * diff};
}

namespace {

std::array<FieldElem, FieldElem::kVars> generator_elems() {
    return {FieldElem::alpha(0), FieldElem::alpha(1), FieldElem::f(0),
            FieldElem::f(1),     FieldElem::f(2),     FieldElem::g()};
}

bool words_agree(const WeylWord& a, const WeylWord& b) {
    for (const FieldElem& v : generator_elems())
        if (weyl_apply(a, v) != weyl_apply(b, v)) return false;
    return true;
}

bool word_commutes_with_derivation(const WeylWord& w) {
    for (const FieldElem& v : generator_elems())
        if (weyl_apply(w, v.derivative()) != weyl_apply(w, v).derivative()) return false;
    return true;
}

void collect_words(const WeylWord& base, int remaining, CheckList& out) {
    static const WeylLetter kGen[] = {WeylLetter::S0, WeylLetter::S1, WeylLetter::S2, WeylLetter::Pi};
    for (WeylLetter l : kGen) {
        WeylWord w = base;
        w.letters.push_back(l);
        out.push_back({"differential automorphism: " + w.str(), word_commutes_with_derivation(w), ""});
        if (remaining > 1) collect_words(w, remaining - 1, out);
    }
}

} // namespace

CheckList weyl_relation_checks(int max_word_length) {
    using L = WeylLetter;
    CheckList out;
    auto relation = [&](const char* name, const WeylWord& lhs, const WeylWord& rhs) {
        out.push_back({name, words_agree(lhs, rhs), ""});
    };
    relation("s0 s0 = 1", {L::S0, L::S0}, {});
    relation("s1 s1 = 1", {L::S1, L::S1}, {});
    relation("s2 s2 = 1", {L::S2, L::S2}, {});
    relation("s0 s1 s0 = s1 s0 s1", {L::S0, L::S1, L::S0}, {L::S1, L::S0, L::S1});
    relation("s1 s2 s1 = s2 s1 s2", {L::S1, L::S2, L::S1}, {L::S2, L::S1, L::S2});
    relation("s2 s0 s2 = s0 s2 s0", {L::S2, L::S0, L::S2}, {L::S0, L::S2, L::S0});
    relation("pi^3 = 1", {L::Pi, L::Pi, L::Pi}, {});
    relation("pi s0 = s1 pi", {L::Pi, L::S0}, {L::S1, L::Pi});
    relation("pi s1 = s2 pi", {L::Pi, L::S1}, {L::S2, L::Pi});
    relation("pi s2 = s0 pi", {L::Pi, L::S2}, {L::S0, L::Pi});
    relation("pi pi^-1 = 1", {L::Pi, L::PiInv}, {});

    if (max_word_length >= 1) collect_words(WeylWord{}, max_word_length, out);
    return out;
}

Check f1_second_order_ode_check() {
    const FieldElem f1 = FieldElem::f(1);
    const FieldElem x = FieldElem::x();
    const FieldElem d1 = f1.derivative();
    const FieldElem d2 = d1.derivative();
    FieldElem residual = d2 - Rational(1, 2) * (d1 * d1 / f1) - Rational(3, 2) * f1.pow(3) +
                         Rational(6) * (x * f1 * f1) +
                         (Rational(-9, 2) * (x * x) + FieldElem::alpha(0) - FieldElem::alpha(2)) * f1 +
                         Rational(1, 2) * (FieldElem::alpha(1) * FieldElem::alpha(1) / f1);
    return {"second-order equation for f1", residual.is_zero(), ""};
}

CheckList log_tau_second_derivative_checks() {
    const Rational third(1, 3);
    std::array<FieldElem, 3> Fp;
    for (int i = 0; i < 3; ++i)
        Fp[static_cast<size_t>(i)] =
            third * (FieldElem::g() - FieldElem::f(i + 1) + FieldElem::f(i + 2));
    const FieldElem x = FieldElem::x();

    CheckList out;
    for (int i = 0; i < 3; ++i) {
        const FieldElem& a = Fp[static_cast<size_t>(i)];
        const FieldElem& b = Fp[static_cast<size_t>((i + 1) % 3)];
        const FieldElem& c = Fp[static_cast<size_t>((i + 2) % 3)];
        FieldElem residual = a.derivative() + x * (b - c) + (a - b) * (a - c) +
                             third * (FieldElem::alpha(i + 1) - FieldElem::alpha(i + 2));
        out.push_back({"log-tau second derivative, index " + std::to_string(i), residual.is_zero(), ""});
    }
    FieldElem sum = FieldElem::constant(Rational(0));
    for (int i = 0; i < 3; ++i) {
        sum = sum + Rational(2) * Fp[static_cast<size_t>(i)].derivative();
        FieldElem d = Fp[static_cast<size_t>(i)] - Fp[static_cast<size_t>((i + 1) % 3)];
        sum = sum + d * d;
    }
    out.push_back({"sum of log-tau second derivatives", sum.is_zero(), ""});
    return out;
}

Check hamiltonian_derivative_check() {
    FieldElem H = Rational(1, 3) * (FieldElem::f(0) * FieldElem::f(1) * FieldElem::f(2) +
                                    FieldElem::alpha(1) * FieldElem::f(2) -
                                    FieldElem::alpha(2) * FieldElem::f(1));
    bool ok = H.derivative() == FieldElem::f(1) * FieldElem::f(2);
    return {"hamiltonian derivative equals f1 f2", ok, ""};
}

} // namespace p4
