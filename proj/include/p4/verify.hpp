#pragma once

#include <string>
#include <vector>

#include "p4/check.hpp"
#include "p4/lattice.hpp"

namespace p4::verify {

// Fundamental relations of the symmetry group and commutation with the
// derivation, on all six field generators.
CheckList weyl_suite(int max_word_length = 2);
// Symbolic consequences of the system inside the differential field.
CheckList field_suite();
// Bilinear identities across a lattice window.
CheckList tau_suite(Family family, int window = 3);
// Toda route versus specialized Schur route, with degree and coefficient
// shape checks.
CheckList dual_route_suite(int okamoto_window = 4, int hermite_window = 4);
// Combinatorial vertex action: anti-commutation, generation chains, cyclic
// relations, slot invariance.
CheckList vertex_suite();
// Bilinear equations of KP type for Schur functions, and independence of
// t_3, t_6 for the 3-reduced family.
CheckList kp_suite();
// Generating functions of the one-row and one-column specializations.
CheckList genfunc_suite(int order = 10);
// Leading and hook-length coefficient formulas; classic recurrences against
// the lattice.
CheckList coefficients_suite();
// Rational solutions: seed triples, the worked transformation example, and
// f-triples across windows.
CheckList solutions_suite();

struct NamedSuite {
    std::string name;
    CheckList checks;
};

std::vector<std::string> suite_names();
// Runs one suite by name, or every suite for "all".
std::vector<NamedSuite> run(const std::string& which);

} // namespace p4::verify
