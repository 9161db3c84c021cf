#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "p4/lattice.hpp"

using namespace p4;

namespace {

UniPoly upoly(std::initializer_list<long> coeffs_low_first) {
    std::vector<Rational> c;
    for (long v : coeffs_low_first) c.push_back(Rational(v));
    return UniPoly(std::move(c));
}

} // namespace

TEST_CASE("Okamoto seeds and first steps") {
    TauLattice lat(Family::Okamoto);
    CHECK(lat.okamoto_poly(0, 0) == upoly({1}));
    CHECK(lat.okamoto_poly(1, 0) == upoly({1}));
    CHECK(lat.okamoto_poly(1, 1) == upoly({1}));
    CHECK(lat.okamoto_poly(2, 1) == upoly({0, 1}));

    CHECK(lat.okamoto_poly(2, 0) == upoly({1, 0, 1}));   // x^2 + 1
    CHECK(lat.okamoto_poly(0, 1) == upoly({0, 1}));      // x
    CHECK(lat.okamoto_poly(0, -1) == upoly({0, 1}));     // x
    CHECK(lat.okamoto_poly(-1, 0) == upoly({-1, 0, 1})); // x^2 - 1
    CHECK(lat.okamoto_poly(3, 2) == upoly({-1, 0, -2, 0, 1}));
    CHECK(lat.okamoto_poly(-1, -1) == upoly({1, 0, 1}));
    CHECK(lat.okamoto_poly(-1, -2) == upoly({-1, 0, 2, 0, 1})); // x^4 + 2x^2 - 1
}

TEST_CASE("Okamoto polynomials are monic integer of the right degree") {
    TauLattice lat(Family::Okamoto);
    for (int m = -4; m <= 4; ++m) {
        for (int n = -4; n <= 4; ++n) {
            const UniPoly& q = lat.okamoto_poly(m, n);
            CHECK(q.is_monic());
            CHECK(q.has_integer_coeffs());
            CHECK(q.degree() ==
                  static_cast<long>(m) * m + static_cast<long>(n) * n - static_cast<long>(m) * n - m);
        }
    }
}

TEST_CASE("generalized Hermite seeds and first steps") {
    TauLattice lat(Family::Hermite);
    CHECK(lat.hermite_poly(0, 0) == upoly({1}));
    CHECK(lat.hermite_poly(1, 0) == upoly({1}));
    CHECK(lat.hermite_poly(0, 1) == upoly({1}));
    CHECK(lat.hermite_poly(1, 1) == upoly({0, 3}));

    CHECK(lat.hermite_poly(2, 1) == upoly({-9, 0, 27}));  // 27x^2 - 9
    CHECK(lat.hermite_poly(1, 2) == upoly({-9, 0, -27})); // -27x^2 - 9
    CHECK(lat.hermite_poly(2, 0) == upoly({3}));
    CHECK(lat.hermite_poly(0, 2) == upoly({-3}));
    CHECK(lat.hermite_poly(3, 0) == upoly({54}));
    CHECK(lat.hermite_poly(2, 2) == upoly({-243, 0, 0, 0, -729})); // -729x^4 - 243
    CHECK_THROWS_AS(lat.hermite_poly(-1, 2), OutOfRegionError);
}

TEST_CASE("dual routes agree") {
    TauLattice ok(Family::Okamoto);
    for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) CHECK(ok.okamoto_poly(m, n) == okamoto_Q_schur(m, n));

    TauLattice h(Family::Hermite);
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n) CHECK(h.hermite_poly(m, n) == hermite_H_schur(m, n));
}

TEST_CASE("classic one-parameter recurrences") {
    auto [q0, r0] = classic_QR(0);
    CHECK(q0 == upoly({1}));
    CHECK(r0 == upoly({1}));
    auto [q2, r2] = classic_QR(2);
    CHECK(q2 == upoly({1, 0, 1}));
    CHECK(r2 == upoly({-1, 0, 2, 0, 1}));

    TauLattice lat(Family::Okamoto);
    for (int m = 0; m <= 6; ++m) {
        auto [qm, rm] = classic_QR(m);
        CHECK(qm == lat.okamoto_poly(m, 0));
        CHECK(rm == lat.okamoto_poly(m + 1, 1));
    }
}

TEST_CASE("gauged tau cells") {
    CHECK(tau_at(Family::Okamoto, 0, 0) == GaugedFn(0, Rational(0), upoly({1})));
    CHECK(tau_at(Family::Hermite, 1, 0) == GaugedFn(1, Rational(1), upoly({1})));
    CHECK(tau_at(Family::Hermite, 1, 1) == GaugedFn(1, Rational(-1), upoly({1})));
    CHECK(tau_at(Family::Hermite, 2, 1) == GaugedFn(1, Rational(0), upoly({0, 3})));
    CHECK_THROWS_AS(tau_at(Family::Hermite, 0, 1), OutOfRegionError);
    CHECK_THROWS_AS(tau_at(Family::Hermite, 1, -1), OutOfRegionError);
}

TEST_CASE("cell parameters") {
    const std::array<Rational, 3> base = {Rational(1), Rational(1), Rational(1)};
    CHECK(lattice_params(base, 0, 0, TripleKind::First) == base);
    CHECK(lattice_params(base, 1, 0, TripleKind::First) ==
          std::array<Rational, 3>{Rational(4), Rational(-2), Rational(1)});
    CHECK(lattice_params(base, 0, 0, TripleKind::Second) ==
          std::array<Rational, 3>{Rational(2), Rational(-1), Rational(2)});
    CHECK(lattice_params(base, -1, -1, TripleKind::First) ==
          std::array<Rational, 3>{Rational(-2), Rational(1), Rational(4)});
}

TEST_CASE("f-triples") {
    TauLattice ok(Family::Okamoto);
    SolutionTriple seed = ok.f_triple(0, 0, TripleKind::First);
    CHECK(seed.f[0] == UniRatFunc::x());
    CHECK(seed.f[1] == UniRatFunc::x());
    CHECK(seed.f[2] == UniRatFunc::x());
    CHECK(seed.alphas == std::array<Rational, 3>{Rational(1), Rational(1), Rational(1)});
    CHECK(verify_solution(seed).ok);

    SolutionTriple t = ok.f_triple(-1, -1, TripleKind::First);
    CHECK(t.alphas == std::array<Rational, 3>{Rational(-2), Rational(1), Rational(4)});
    CHECK(t.f[0] == UniRatFunc(upoly({1, 0, 1}), upoly({0, 1})));
    CHECK(t.f[1] == UniRatFunc(upoly({0, -1, 0, 1}), upoly({1, 0, 1})));
    CHECK(t.f[2] == UniRatFunc(upoly({-1, 0, 2, 0, 1}), upoly({0, 1, 0, 1})));
    CHECK(verify_solution(t).ok);

    TauLattice h(Family::Hermite);
    SolutionTriple hs = h.f_triple(0, 0, TripleKind::First);
    CHECK(hs.f[0] == Rational(3) * UniRatFunc::x());
    CHECK(hs.f[1].is_zero());
    CHECK(hs.f[2].is_zero());
    CHECK(hs.alphas == std::array<Rational, 3>{Rational(3), Rational(0), Rational(0)});
    CHECK(verify_solution(hs).ok);
    CHECK_THROWS_AS(h.f_triple(0, 1, TripleKind::First), OutOfRegionError);
    CHECK_THROWS_AS(h.f_triple(1, 1, TripleKind::Second), OutOfRegionError);
}

TEST_CASE("wrong parameters are rejected") {
    SolutionTriple bad;
    bad.f = {UniRatFunc::x(), UniRatFunc::x(), UniRatFunc::x()};
    bad.alphas = {Rational(1), Rational(1), Rational(0)};
    CHECK_FALSE(verify_solution(bad).ok);
}

TEST_CASE("lattice identity suite on a small window") {
    for (Family family : {Family::Okamoto, Family::Hermite}) {
        TauLattice lat(family);
        for (const auto& c : lat.identity_checks(2)) {
            INFO(c.name << " [" << c.detail << "]");
            CHECK(c.pass);
        }
    }
}
