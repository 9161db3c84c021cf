// Acceptance suite: every check is exact (zero tolerance) and each section
// is expected to finish well under a minute.  Prints one line per criterion.

#include <iostream>
#include <vector>

#include "p4/field.hpp"
#include "p4/format.hpp"
#include "p4/lattice.hpp"
#include "p4/partition.hpp"
#include "p4/schur.hpp"
#include "p4/verify.hpp"
#include "p4/weyl.hpp"

using namespace p4;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << name;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!pass) ++failures;
}

bool suite_passes(const CheckList& checks, std::string& detail) {
    bool ok = true;
    for (const auto& c : checks) {
        if (!c.pass) {
            ok = false;
            if (detail.empty()) detail = c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
        }
    }
    if (detail.empty()) detail = std::to_string(checks.size()) + " checks";
    return ok;
}

void run_suite_criterion(int number, const std::string& name, const CheckList& checks) {
    std::string detail;
    bool ok = suite_passes(checks, detail);
    criterion(number, name, ok, detail);
}

UniPoly upoly(std::initializer_list<long> coeffs_low_first) {
    std::vector<Rational> c;
    for (long v : coeffs_low_first) c.push_back(Rational(v));
    return UniPoly(std::move(c));
}

} // namespace

int main() {
    // 1. The (3,2) polynomial through both routes, and the Schur function
    //    S_{(2,1,1)} itself.
    {
        const UniPoly expected = upoly({-1, 0, -2, 0, 1});
        bool ok = okamoto_Q(3, 2) == expected && okamoto_Q_schur(3, 2) == expected;
        MultiPoly s(4);
        s.add_term({4, 0, 0, 0}, Rational(1, 8));
        s.add_term({2, 1, 0, 0}, Rational(-1, 2));
        s.add_term({0, 2, 0, 0}, Rational(-1, 2));
        s.add_term({0, 0, 0, 1}, Rational(1));
        ok = ok && schur(Partition({2, 1, 1})).polynomial == s;
        criterion(1, "Q(3,2) via both routes and S(2,1,1) exactly", ok);
    }

    // 2. Route equality, degrees, and coefficient shape across the windows.
    run_suite_criterion(2, "dual-route equality on |m|,|n| <= 4", verify::dual_route_suite(4, 4));

    // 3. The four seeds of each family.
    {
        TauLattice ok_lat(Family::Okamoto);
        TauLattice h_lat(Family::Hermite);
        bool ok = ok_lat.okamoto_poly(0, 0) == upoly({1}) && ok_lat.okamoto_poly(1, 0) == upoly({1}) &&
                  ok_lat.okamoto_poly(1, 1) == upoly({1}) && ok_lat.okamoto_poly(2, 1) == upoly({0, 1}) &&
                  h_lat.hermite_poly(0, 0) == upoly({1}) && h_lat.hermite_poly(1, 0) == upoly({1}) &&
                  h_lat.hermite_poly(0, 1) == upoly({1}) && h_lat.hermite_poly(1, 1) == upoly({0, 3});
        criterion(3, "seed polynomials", ok);
    }

    // 4. Group relations as automorphism identities, including the action on
    //    g, and commutation of every generator with the derivation.
    run_suite_criterion(4, "symmetry group relations and derivation commutation",
                        verify::weyl_suite(1));

    // 5. The worked transformation of the constant-slope solution.
    {
        const WeylWord w = WeylWord::parse("s1 s0");
        const std::array<Rational, 3> alphas = {Rational(1), Rational(1), Rational(1)};
        const std::array<UniRatFunc, 3> f = {UniRatFunc::x(), UniRatFunc::x(), UniRatFunc::x()};
        SolutionTriple got;
        for (int i = 0; i < 3; ++i)
            got.f[static_cast<size_t>(i)] = eval_at_solution(weyl_apply(w, FieldElem::f(i)), alphas, f);
        auto beta = weyl_apply_alphas(w);
        for (int i = 0; i < 3; ++i)
            got.alphas[static_cast<size_t>(i)] =
                eval_at_solution(beta[static_cast<size_t>(i)], alphas, f).num().coeff(0);
        bool ok = got.alphas == std::array<Rational, 3>{Rational(-2), Rational(1), Rational(4)} &&
                  got.f[0] == UniRatFunc(upoly({1, 0, 1}), upoly({0, 1})) &&
                  got.f[1] == UniRatFunc(upoly({0, -1, 0, 1}), upoly({1, 0, 1})) &&
                  got.f[2] == UniRatFunc(upoly({-1, 0, 2, 0, 1}), upoly({0, 1, 0, 1})) &&
                  verify_solution(got).ok;
        criterion(5, "s1 s0 transform of (1,1,1; x,x,x)", ok);
    }

    // 6. Symbolic identities in the differential field and its g-extension.
    run_suite_criterion(6, "field identities (second-order equation, log-tau relations, H' = f1 f2)",
                        verify::field_suite());

    // 7. Bilinear identity suite across both lattice windows.
    {
        CheckList checks = verify::tau_suite(Family::Okamoto, 3);
        CheckList h = verify::tau_suite(Family::Hermite, 3);
        checks.insert(checks.end(), h.begin(), h.end());
        run_suite_criterion(7, "tau-function identities on both windows", checks);
    }

    // 8. Vertex combinatorics and the KP-type bilinear equations.
    {
        CheckList checks = verify::vertex_suite();
        CheckList kp = verify::kp_suite();
        checks.insert(checks.end(), kp.begin(), kp.end());
        run_suite_criterion(8, "vertex action and KP-type equations", checks);
    }

    // 9. Generating functions through order 10.
    run_suite_criterion(9, "generating functions of one-row/one-column specializations",
                        verify::genfunc_suite(10));

    // 10. Coefficient formulas and the classic recurrences.
    run_suite_criterion(10, "leading/hook coefficient formulas and classic recurrences",
                        verify::coefficients_suite());

    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
