#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "p4/schur.hpp"

#include "oracles.hpp"

using namespace p4;

namespace {

MultiPoly term(int nvars, const Rational& c, ExpVec e) {
    MultiPoly p(nvars);
    e.resize(static_cast<size_t>(nvars), 0);
    p.add_term(e, c);
    return p;
}

} // namespace

TEST_CASE("power sums of the generating series") {
    CHECK(p_poly(0, 1) == MultiPoly::constant(1, Rational(1)));
    CHECK(p_poly(-1, 1).is_zero());
    MultiPoly expected = term(2, Rational(1, 2), {2, 0}) + term(2, Rational(1), {0, 1});
    CHECK(p_poly(2, 2) == expected);

    // Specialized form agrees with substituting into the full polynomial.
    for (int n = 0; n <= 9; ++n) {
        MultiPoly full = p_poly(n, std::max(1, n));
        CHECK(p_specialized(n, Rational(1, 2)) == full.substitute_x_c(Rational(1, 2)));
        CHECK(p_specialized(n, Rational(1, 6)) == full.substitute_x_c(Rational(1, 6)));
    }
}

TEST_CASE("schur function of (2,1,1)") {
    MultiPoly expected = term(4, Rational(1, 8), {4, 0, 0, 0}) +
                         term(4, Rational(-1, 2), {2, 1, 0, 0}) +
                         term(4, Rational(-1, 2), {0, 2, 0, 0}) + term(4, Rational(1), {0, 0, 0, 1});
    CHECK(schur(Partition({2, 1, 1})).polynomial == expected);
    CHECK(schur(Partition()).polynomial == MultiPoly::constant(1, Rational(1)));
    CHECK(schur(Partition({1})).polynomial == MultiPoly::var(1, 0));
}

TEST_CASE("specialization") {
    UniPoly expected{std::vector<Rational>{Rational(-1, 8), Rational(0), Rational(-1, 4),
                                           Rational(0), Rational(1, 8)}};
    CHECK(specialize(schur(Partition({2, 1, 1})), Rational(1, 2)) == expected);
    CHECK(specialize(schur(Partition()), Rational(7, 3)) == UniPoly(Rational(1)));
    CHECK(specialize(schur(Partition({1})), Rational(1, 6)) == UniPoly::x());
}

TEST_CASE("determinant-of-specializations shortcut agrees with full specialization") {
    for (const Partition& lam : partitions_up_to(7)) {
        for (const Rational& c : {Rational(1, 2), Rational(1, 6)}) {
            CHECK(schur_specialized(lam, c) == specialize(schur(lam), c));
        }
    }
}

TEST_CASE("schur functions are weight homogeneous") {
    for (const Partition& lam : partitions_up_to(8)) {
        const MultiPoly& s = schur(lam).polynomial;
        CHECK(s.is_weight_homogeneous());
        CHECK(s.weighted_degree() == lam.weight());
    }
}

TEST_CASE("vertex action on the signed-partition basis") {
    CHECK(vertex_apply(0, Partition(), 0) == SignedPartition::plus(Partition()));
    for (int k = -3; k < 0; ++k) CHECK(vertex_apply(k, Partition(), 0).is_zero());

    SignedPartition r = vertex_apply(5, Partition({3, 1}), 2);
    REQUIRE(!r.is_zero());
    CHECK(r.partition == Partition({5, 3, 1}));
    // Pin the sign against the differential form.
    const int nvars = 9;
    MultiPoly via_diff = testing::vertex_differential(5, schur(Partition({3, 1})).polynomial, nvars);
    CHECK(via_diff == testing::signed_schur_poly(r, nvars));
}

TEST_CASE("vertex chains") {
    std::vector<int> ks = {2, 1, 1};
    CHECK(vertex_apply_chain(ks) == SignedPartition::plus(Partition({2, 1, 1})));
    std::vector<int> zero = {0};
    CHECK(vertex_apply_chain(zero) == SignedPartition::plus(Partition()));
    std::vector<int> neg = {-3};
    CHECK(vertex_apply_chain(neg).is_zero());
}

TEST_CASE("combinatorial vertex action matches the differential operator") {
    for (const Partition& lam : partitions_up_to(5)) {
        const MultiPoly s = schur(lam).polynomial;
        for (int k = -3; k <= 5; ++k) {
            SignedPartition image = vertex_apply(k, lam);
            const int nvars = static_cast<int>(
                std::max({1L, lam.weight(), image.is_zero() ? 0L : image.partition.weight()}));
            CHECK(testing::vertex_differential(k, s, nvars) == testing::signed_schur_poly(image, nvars));
        }
    }
}

TEST_CASE("normalization constants") {
    CHECK(okamoto_normalization(3, 2) == 8);
    CHECK(okamoto_normalization(0, 0) == 1);
    CHECK(okamoto_normalization(1, 1) == 1);
    CHECK(hermite_normalization(1, 1) == Rational(3));
    CHECK(hermite_normalization(0, 0) == Rational(1));
    CHECK(hermite_normalization(2, 1) == Rational(54));
    CHECK(hermite_normalization(0, 2) == Rational(-3));
    CHECK_THROWS_AS(hermite_normalization(-1, 0), Error);
}
