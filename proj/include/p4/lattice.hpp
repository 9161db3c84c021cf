#pragma once

#include <array>
#include <map>
#include <utility>

#include "p4/bilinear.hpp"
#include "p4/check.hpp"
#include "p4/schur.hpp"
#include "p4/unipoly.hpp"

namespace p4 {

enum class Family { Okamoto, Hermite };

// Which of the two translated triples of tau functions a cell carries:
// First  = (tau_{m,n}, tau_{m+1,n}, tau_{m+1,n+1})
// Second = (tau_{m,n}, tau_{m,n+1}, tau_{m+1,n+1})
enum class TripleKind { First, Second };

struct SolutionTriple {
    std::array<UniRatFunc, 3> f;
    std::array<Rational, 3> alphas;
};

struct SolutionVerdict {
    bool ok = false;
    std::array<UniRatFunc, 3> residuals;
};

// Checks f_i' + f_i (f_{i+1} - f_{i+2}) = alpha_i for i = 0, 1, 2.
SolutionVerdict verify_solution(const SolutionTriple& s);

// Parameters of the cell (m, n) relative to a base triple with sum 3.
std::array<Rational, 3> lattice_params(const std::array<Rational, 3>& base, int m, int n,
                                       TripleKind kind);

// Memoized table (m, n) -> tau function for one rational seed family, filled
// by the Toda recurrences with exact division.  Redundant recurrences and
// the bilinear pair equations are re-verified by identity_checks().
class TauLattice {
public:
    explicit TauLattice(Family family) : family_(family) {}
    Family family() const { return family_; }
    std::array<Rational, 3> base_params() const;

    // Okamoto polynomial Q_{m,n}, defined on all of Z^2.  Monic with integer
    // coefficients of degree m^2 + n^2 - mn - m.
    const UniPoly& okamoto_poly(int m, int n);
    // Generalized Hermite polynomial H_{m,n} (its own plane, m, n >= 0),
    // degree mn.  The lattice cell (m, n) carries H_{m-n,n}.
    const UniPoly& hermite_poly(int m, int n);

    // Gauged tau function at a lattice cell.  The Hermite family is defined
    // only for m >= n >= 0; other requests raise OutOfRegionError.
    GaugedFn tau(int m, int n);

    SolutionTriple f_triple(int m, int n, TripleKind kind);

    // Verifies, on every cell with |m|, |n| <= window (Okamoto) or on the
    // wedge 0 <= n <= m <= window (Hermite): the bilinear pair equations,
    // the (D+x) neighbor formulas, the multiplicative expressions for the
    // f-variables, the 3x-product identity, and the three Toda equations.
    CheckList identity_checks(int window);

private:
    const UniPoly& cell(int m, int n);
    // Zero on the two boundary lines just outside the Hermite wedge (where
    // the family's tau functions vanish); OutOfRegionError beyond them.
    GaugedFn tau_extended(int m, int n);
    UniRatFunc cell_ratio(std::pair<int, int> n1, std::pair<int, int> n2, std::pair<int, int> d1,
                          std::pair<int, int> d2);

    Family family_;
    std::map<std::pair<int, int>, UniPoly> cells_;
};

// One-off conveniences over a fresh lattice.
UniPoly okamoto_Q(int m, int n);
UniPoly hermite_H(int m, int n);
GaugedFn tau_at(Family family, int m, int n);

// The same polynomials through the specialized Schur function route.
UniPoly okamoto_Q_schur(int m, int n);
UniPoly hermite_H_schur(int m, int n);

// Classic one-parameter families by direct recurrence; Q_m agrees with
// Q_{m,0} and R_m with Q_{m+1,1}.
std::pair<UniPoly, UniPoly> classic_QR(int m);

} // namespace p4
