#include "p4/verify.hpp"

#include <sstream>

#include "p4/field.hpp"
#include "p4/format.hpp"
#include "p4/partition.hpp"
#include "p4/weyl.hpp"

namespace p4::verify {

namespace {

struct Tally {
    int total = 0;
    int failed = 0;
    std::string first_failure;

    void note(bool pass, const std::string& where) {
        ++total;
        if (!pass && failed++ == 0) first_failure = where;
    }
    Check done(const std::string& name) const {
        std::ostringstream os;
        os << total << " instances";
        if (failed) os << ", " << failed << " failed (first: " << first_failure << ")";
        return {name, failed == 0, os.str()};
    }
};

MultiPoly signed_schur(const SignedPartition& s, int nvars) {
    if (s.is_zero()) return MultiPoly(nvars);
    MultiPoly p = schur(s.partition).polynomial.extended(nvars);
    return s.sign < 0 ? -p : p;
}

} // namespace

CheckList weyl_suite(int max_word_length) { return weyl_relation_checks(max_word_length); }

CheckList field_suite() {
    CheckList out;
    out.push_back(f1_second_order_ode_check());
    for (auto& c : log_tau_second_derivative_checks()) out.push_back(std::move(c));
    out.push_back(hamiltonian_derivative_check());
    return out;
}

CheckList tau_suite(Family family, int window) {
    TauLattice lat(family);
    return lat.identity_checks(window);
}

CheckList dual_route_suite(int okamoto_window, int hermite_window) {
    CheckList out;
    {
        TauLattice lat(Family::Okamoto);
        Tally routes, shape;
        for (int m = -okamoto_window; m <= okamoto_window; ++m) {
            for (int n = -okamoto_window; n <= okamoto_window; ++n) {
                const UniPoly& toda = lat.okamoto_poly(m, n);
                const UniPoly schur_route = okamoto_Q_schur(m, n);
                routes.note(toda == schur_route, "(" + std::to_string(m) + "," + std::to_string(n) + ")");
                const long degree = static_cast<long>(m) * m + static_cast<long>(n) * n -
                                    static_cast<long>(m) * n - m;
                bool good = toda.degree() == degree && toda.is_monic() && toda.has_integer_coeffs();
                shape.note(good, "(" + std::to_string(m) + "," + std::to_string(n) + ")");
            }
        }
        out.push_back(routes.done("Okamoto polynomials: Toda route equals Schur route"));
        out.push_back(shape.done("Okamoto polynomials: monic, integer, degree m^2+n^2-mn-m"));
    }
    {
        TauLattice lat(Family::Hermite);
        Tally routes, shape;
        for (int m = 0; m <= hermite_window; ++m) {
            for (int n = 0; n <= hermite_window; ++n) {
                const UniPoly& toda = lat.hermite_poly(m, n);
                const UniPoly schur_route = hermite_H_schur(m, n);
                routes.note(toda == schur_route, "(" + std::to_string(m) + "," + std::to_string(n) + ")");
                shape.note(toda.degree() == m * n, "(" + std::to_string(m) + "," + std::to_string(n) + ")");
            }
        }
        out.push_back(routes.done("generalized Hermite polynomials: Toda route equals Schur route"));
        out.push_back(shape.done("generalized Hermite polynomials: degree mn"));
    }
    return out;
}

CheckList vertex_suite() {
    CheckList out;
    const auto shapes5 = partitions_up_to(5);

    Tally anti;
    for (int k = -3; k <= 5; ++k) {
        for (int l = -3; l <= 5; ++l) {
            for (const Partition& lam : shapes5) {
                const int s = lam.length();
                SignedPartition lhs = vertex_apply(k, vertex_apply(l, lam, s), s + 1);
                SignedPartition rhs = vertex_apply(l - 1, vertex_apply(k + 1, lam, s), s + 1);
                anti.note(lhs == -rhs, "k=" + std::to_string(k) + " l=" + std::to_string(l) + " " + lam.str());
            }
        }
    }
    out.push_back(anti.done("anti-commutation X_k X_l = -X_{l-1} X_{k+1}"));

    Tally chains;
    for (const Partition& lam : partitions_up_to(8)) {
        SignedPartition got = vertex_apply_chain(lam.parts());
        chains.note(got == SignedPartition::plus(lam), lam.str());
    }
    out.push_back(chains.done("generation chains X_{l1}...X_{ln}.1 = +lambda"));

    Tally cyc;
    for (int m = -3; m <= 3; ++m) {
        for (int n = -3; n <= 3; ++n) {
            auto step = [&](int k, const Partition& from, const Partition& expect, const char* tag) {
                SignedPartition r = vertex_apply(k, from);
                cyc.note(!r.is_zero() && r.partition == expect,
                         std::string(tag) + " at (" + std::to_string(m) + "," + std::to_string(n) + ")");
            };
            step(2 * m - n, lambda_mn(m, n), lambda_mn(m + 1, n), "cycle1/raise-m");
            step(2 * n - m, lambda_mn(m + 1, n), lambda_mn(m + 1, n + 1), "cycle1/raise-n");
            step(-m - n, lambda_mn(m + 1, n + 1), lambda_mn(m, n), "cycle1/close");
            step(2 * n - m + 1, lambda_mn(m, n), lambda_mn(m, n + 1), "cycle2/raise-n");
            step(2 * m - n - 1, lambda_mn(m, n + 1), lambda_mn(m + 1, n + 1), "cycle2/raise-m");
            step(-m - n, lambda_mn(m + 1, n + 1), lambda_mn(m, n), "cycle2/close");
        }
    }
    out.push_back(cyc.done("cyclic relations on 3-reduced shapes"));

    Tally slots;
    for (int k = -3; k <= 5; ++k) {
        for (const Partition& lam : shapes5) {
            SignedPartition base = vertex_apply(k, lam, lam.length());
            bool ok = vertex_apply(k, lam, lam.length() + 1) == base &&
                      vertex_apply(k, lam, lam.length() + 2) == base;
            slots.note(ok, "k=" + std::to_string(k) + " " + lam.str());
        }
    }
    out.push_back(slots.done("slot invariance of the vertex action"));
    return out;
}

CheckList kp_suite() {
    CheckList out;

    MultiBilinearOp kp;
    kp.plus(Rational(1), {4, 0, 0}).plus(Rational(-4), {1, 0, 1}).plus(Rational(3), {0, 2, 0});
    Tally kpt;
    for (const Partition& lam : partitions_up_to(6)) {
        const int nvars = std::max(3L, lam.weight());
        MultiPoly s = schur(lam).polynomial.extended(nvars);
        kpt.note(hirota_multi(kp, s, s).is_zero(), lam.str());
    }
    out.push_back(kpt.done("(D1^4 - 4 D1 D3 + 3 D2^2) S.S = 0"));

    MultiBilinearOp mkp;
    mkp.plus(Rational(1), {2, 0}).plus(Rational(1), {0, 1});
    Tally mkpt;
    for (const Partition& lam : partitions_up_to(5)) {
        for (int k = -2; k <= 4; ++k) {
            SignedPartition image = vertex_apply(k, lam);
            const int nvars =
                static_cast<int>(std::max({3L, lam.weight(), image.is_zero() ? 0L : image.partition.weight()}));
            MultiPoly s0 = schur(lam).polynomial.extended(nvars);
            MultiPoly s1 = signed_schur(image, nvars);
            mkpt.note(hirota_multi(mkp, s0, s1).is_zero(), lam.str() + " k=" + std::to_string(k));
        }
    }
    out.push_back(mkpt.done("(D1^2 + D2) S.(X_k S) = 0"));

    Tally red;
    for (int m = -3; m <= 3; ++m) {
        for (int n = -3; n <= 3; ++n) {
            MultiPoly s = schur(lambda_mn(m, n)).polynomial;
            bool ok = (s.nvars() < 3 || s.partial(2).is_zero()) &&
                      (s.nvars() < 6 || s.partial(5).is_zero());
            red.note(ok, "(" + std::to_string(m) + "," + std::to_string(n) + ")");
        }
    }
    out.push_back(red.done("3-reduced Schur functions do not involve t_3, t_6"));
    return out;
}

CheckList genfunc_suite(int order) {
    // exp(xz + z^2/6) and exp(xz - z^2/6): the z^n coefficient is
    // sum_{i+2j=n} x^i (c)^j / (i! j!) with c = 1/6 resp. -1/6.
    auto expansion_coeff = [](int n, const Rational& c) {
        UniPoly r;
        for (int j = 0; 2 * j <= n; ++j) {
            int i = n - 2 * j;
            Rational coeff = c.pow(j) / Rational(factorial(static_cast<unsigned long>(i)) *
                                                 factorial(static_cast<unsigned long>(j)));
            r += UniPoly::monomial(coeff, i);
        }
        return r;
    };

    Tally row, column;
    for (int n = 0; n <= order; ++n) {
        UniPoly lhs = specialize(schur(Partition::rectangle(1, n)), Rational(1, 6));
        row.note(lhs == expansion_coeff(n, Rational(1, 6)), "n=" + std::to_string(n));
        UniPoly lhs_col = specialize(schur(Partition::rectangle(n, 1)), Rational(1, 6));
        column.note(lhs_col == expansion_coeff(n, Rational(-1, 6)), "m=" + std::to_string(n));
    }
    CheckList out;
    out.push_back(row.done("one-row specializations generate exp(xz + z^2/6)"));
    out.push_back(column.done("one-column specializations generate exp(xz - z^2/6)"));
    return out;
}

CheckList coefficients_suite() {
    CheckList out;

    {
        TauLattice lat(Family::Hermite);
        Tally lead;
        for (int m = 0; m <= 4; ++m) {
            for (int n = 0; n <= 4; ++n) {
                Integer expect = superfactorial(m - 1) * superfactorial(n - 1) *
                                 pow(Integer(3), static_cast<unsigned long>((m + n) * (m + n - 1) / 2));
                if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) expect = -expect;
                lead.note(lat.hermite_poly(m, n).leading() == Rational(expect),
                          "(" + std::to_string(m) + "," + std::to_string(n) + ")");
            }
        }
        out.push_back(lead.done("generalized Hermite leading coefficients"));
        bool pinned = lat.hermite_poly(1, 1).leading() == Rational(3) &&
                      lat.hermite_poly(2, 1).leading() == Rational(27) &&
                      lat.hermite_poly(2, 2).leading() == Rational(-729);
        out.push_back({"pinned leading values at (1,1), (2,1), (2,2)", pinned, "3, 27, -729"});
    }

    Tally hook;
    for (const Partition& lam : partitions_up_to(8)) {
        MultiPoly s = schur(lam).polynomial;
        ExpVec e(static_cast<size_t>(s.nvars()), 0);
        if (!e.empty()) e[0] = static_cast<int>(lam.weight());
        hook.note(s.coeff(e) == Rational(Integer(1), lam.hook_product()), lam.str());
    }
    out.push_back(hook.done("coefficient of t1^{|lambda|} is 1/hook product"));

    Tally rect;
    for (int m = 1; m <= 4; ++m) {
        for (int n = 1; n <= 4; ++n) {
            const Partition r = Partition::rectangle(m, n);
            Integer hp = r.hook_product();
            bool ok = hp * superfactorial(m - 1) * superfactorial(n - 1) == superfactorial(m + n - 1);
            ok = ok && schur_specialized(r, Rational(1, 6)).leading() == Rational(Integer(1), hp);
            rect.note(ok, r.str());
        }
    }
    out.push_back(rect.done("rectangle hook products and specialized leading coefficients"));

    {
        TauLattice lat(Family::Okamoto);
        Tally classic;
        for (int m = 0; m <= 6; ++m) {
            auto [qm, rm] = classic_QR(m);
            classic.note(qm == lat.okamoto_poly(m, 0) && rm == lat.okamoto_poly(m + 1, 1),
                         "m=" + std::to_string(m));
        }
        out.push_back(classic.done("classic recurrences match the lattice"));
    }
    return out;
}

CheckList solutions_suite() {
    CheckList out;

    {
        // Transforming the constant-slope solution by s1 s0.
        const WeylWord w = WeylWord::parse("s1 s0");
        const std::array<Rational, 3> alphas = {Rational(1), Rational(1), Rational(1)};
        const std::array<UniRatFunc, 3> f = {UniRatFunc::x(), UniRatFunc::x(), UniRatFunc::x()};
        SolutionTriple got;
        for (int i = 0; i < 3; ++i)
            got.f[static_cast<size_t>(i)] = eval_at_solution(weyl_apply(w, FieldElem::f(i)), alphas, f);
        auto beta = weyl_apply_alphas(w);
        for (int i = 0; i < 3; ++i) {
            UniRatFunc b = eval_at_solution(beta[static_cast<size_t>(i)], alphas, f);
            got.alphas[static_cast<size_t>(i)] = b.num().coeff(0);
        }
        const UniPoly x = UniPoly::x();
        const UniPoly x2p1 = x * x + UniPoly(Rational(1));
        SolutionTriple expect;
        expect.f = {UniRatFunc(x2p1, x), UniRatFunc(x * (x * x - UniPoly(Rational(1))), x2p1),
                    UniRatFunc(x * x * x * x + Rational(2) * (x * x) - UniPoly(Rational(1)), x * x2p1)};
        expect.alphas = {Rational(-2), Rational(1), Rational(4)};
        bool ok = got.f == expect.f && got.alphas == expect.alphas && verify_solution(got).ok;
        out.push_back({"transforming (1,1,1; x,x,x) by s1 s0", ok, ""});
    }

    {
        TauLattice ok_lat(Family::Okamoto);
        SolutionTriple seed = ok_lat.f_triple(0, 0, TripleKind::First);
        bool ok = seed.f[0] == UniRatFunc::x() && seed.f[1] == UniRatFunc::x() &&
                  seed.f[2] == UniRatFunc::x() &&
                  seed.alphas == std::array<Rational, 3>{Rational(1), Rational(1), Rational(1)};
        out.push_back({"Okamoto seed triple is (1,1,1; x,x,x)", ok, ""});

        Tally win;
        for (int m = -3; m <= 3; ++m) {
            for (int n = -3; n <= 3; ++n) {
                for (TripleKind kind : {TripleKind::First, TripleKind::Second}) {
                    SolutionTriple t = ok_lat.f_triple(m, n, kind);
                    UniRatFunc sum = t.f[0] + t.f[1] + t.f[2];
                    bool good = verify_solution(t).ok &&
                                sum == Rational(3) * UniRatFunc::x();
                    win.note(good, "(" + std::to_string(m) + "," + std::to_string(n) + ") kind " +
                                       (kind == TripleKind::First ? "1" : "2"));
                }
            }
        }
        out.push_back(win.done("Okamoto f-triples solve the system"));
    }

    {
        TauLattice h_lat(Family::Hermite);
        SolutionTriple seed = h_lat.f_triple(0, 0, TripleKind::First);
        bool ok = seed.f[0] == Rational(3) * UniRatFunc::x() && seed.f[1].is_zero() &&
                  seed.f[2].is_zero() &&
                  seed.alphas == std::array<Rational, 3>{Rational(3), Rational(0), Rational(0)};
        out.push_back({"Hermite seed triple is (3,0,0; 3x,0,0)", ok, ""});

        Tally win;
        for (int m = 0; m <= 3; ++m) {
            for (int n = 0; n <= m; ++n) {
                for (TripleKind kind : {TripleKind::First, TripleKind::Second}) {
                    if (kind == TripleKind::Second && m < n + 1) continue;
                    SolutionTriple t = h_lat.f_triple(m, n, kind);
                    UniRatFunc sum = t.f[0] + t.f[1] + t.f[2];
                    bool good = verify_solution(t).ok && sum == Rational(3) * UniRatFunc::x();
                    win.note(good, "(" + std::to_string(m) + "," + std::to_string(n) + ") kind " +
                                       (kind == TripleKind::First ? "1" : "2"));
                }
            }
        }
        out.push_back(win.done("Hermite f-triples solve the system"));
    }
    return out;
}

std::vector<std::string> suite_names() {
    return {"weyl",    "field",   "tau-okamoto",  "tau-hermite", "dual-route",
            "vertex",  "kp",      "genfunc",      "coefficients", "solutions"};
}

std::vector<NamedSuite> run(const std::string& which) {
    std::vector<NamedSuite> out;
    auto want = [&](const std::string& name) { return which == "all" || which == name; };
    if (want("weyl")) out.push_back({"weyl", weyl_suite()});
    if (want("field")) out.push_back({"field", field_suite()});
    if (want("tau-okamoto")) out.push_back({"tau-okamoto", tau_suite(Family::Okamoto)});
    if (want("tau-hermite")) out.push_back({"tau-hermite", tau_suite(Family::Hermite)});
    if (want("dual-route")) out.push_back({"dual-route", dual_route_suite()});
    if (want("vertex")) out.push_back({"vertex", vertex_suite()});
    if (want("kp")) out.push_back({"kp", kp_suite()});
    if (want("genfunc")) out.push_back({"genfunc", genfunc_suite()});
    if (want("coefficients")) out.push_back({"coefficients", coefficients_suite()});
    if (want("solutions")) out.push_back({"solutions", solutions_suite()});
    if (out.empty()) throw Error("unknown verification suite \"" + which + "\"");
    return out;
}

} // namespace p4::verify
