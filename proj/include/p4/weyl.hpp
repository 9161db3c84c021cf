#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "p4/check.hpp"
#include "p4/field.hpp"

namespace p4 {

enum class WeylLetter { S0, S1, S2, Pi, PiInv };

std::string letter_name(WeylLetter l);
WeylLetter letter_inverse(WeylLetter l);

// Word in the generators s0, s1, s2, pi (and pi^-1).  Group relations are
// verified by tests, not enforced structurally.
struct WeylWord {
    std::vector<WeylLetter> letters;

    WeylWord() = default;
    WeylWord(std::initializer_list<WeylLetter> ls) : letters(ls) {}

    // Accepts e.g. "s1 s0", "pi pi s2", "T1^3 T2^-1", "s0^2 pi^-1".
    // T1 and T2 expand to pi s2 s1 and s1 pi s2.
    static WeylWord parse(std::string_view text);
    std::string str() const;
    WeylWord inverse() const;
    WeylWord operator*(const WeylWord& o) const; // concatenation
};

// Substitution images of (a0, a1, f0, f1, f2, g) under one generator.
using WeylImages = std::array<RationalFunction, FieldElem::kVars>;
const WeylImages& letter_images(WeylLetter l);

FieldElem apply_letter(WeylLetter l, const FieldElem& e);
// w = l1 l2 ... ln acts as the composition l1(l2(...ln(e))); the rightmost
// letter is applied first.
FieldElem weyl_apply(const WeylWord& w, const FieldElem& e);
// Images of (alpha_0, alpha_1, alpha_2) under the word.
std::array<FieldElem, 3> weyl_apply_alphas(const WeylWord& w);

// Point of the parameter plane v_1 + v_2 + v_3 = 0.
struct VPoint {
    Rational v1, v2, v3;
    VPoint(Rational a, Rational b, Rational c);
    friend bool operator==(const VPoint& a, const VPoint& b) {
        return a.v1 == b.v1 && a.v2 == b.v2 && a.v3 == b.v3;
    }
    friend bool operator!=(const VPoint& a, const VPoint& b) { return !(a == b); }
    std::string str() const;
};

VPoint weyl_apply_v(const WeylWord& w, const VPoint& v);

std::array<Rational, 3> params_v_to_alpha(const VPoint& v);
VPoint params_alpha_to_v(const std::array<Rational, 3>& alpha);
// Parameters (a, b) of the scalar second-order form: a = 1 + 3 v_3,
// b = -2 (v_1 - v_2)^2.
std::pair<Rational, Rational> params_alpha_to_ab(const std::array<Rational, 3>& alpha);

// Fundamental relations (involutions, braids, rotation), the action on g,
// and commutation with the derivation, all checked as identities of field
// automorphisms on the six generators.  Words up to max_word_length over
// {s0, s1, s2, pi} are additionally tested to act as differential
// automorphisms.
CheckList weyl_relation_checks(int max_word_length = 1);

// Residual of the scalar second-order equation satisfied by f_1, eliminated
// through the built-in derivation.
Check f1_second_order_ode_check();
// The three second-derivative relations for the logarithms of the tau
// functions (in terms of g) and their sum.
CheckList log_tau_second_derivative_checks();
// H = (f0 f1 f2 + alpha_1 f2 - alpha_2 f1)/3 has H' = f1 f2.
Check hamiltonian_derivative_check();

} // namespace p4
