#pragma once

// Independent oracles and random generators used only by the tests.

#include <random>

#include "p4/multipoly.hpp"
#include "p4/schur.hpp"
#include "p4/unipoly.hpp"

namespace p4::testing {

// Brute-force vertex operator as a differential operator:
//   X_k = sum_{j >= 0} p_{k+j}(t) . p_j(-d~)      (d~_m = (1/m) d/dt_m),
// exact on polynomials since p_j(-d~) lowers degree by j.
inline MultiPoly p_lowering_apply(int j, const MultiPoly& F) {
    if (j == 0) return F;
    MultiPoly out(F.nvars());
    const MultiPoly pj = p_poly(j, j);
    for (const auto& [e, c] : pj.terms()) {
        MultiPoly d = F;
        Rational factor = c;
        bool dead = false;
        for (size_t m = 0; m < e.size() && !dead; ++m) {
            if (e[m] == 0) continue;
            if (static_cast<int>(m) >= F.nvars()) {
                dead = true;
                break;
            }
            for (int r = 0; r < e[m] && !d.is_zero(); ++r) d = d.partial(static_cast<int>(m));
            factor *= Rational(-1, static_cast<long>(m + 1)).pow(e[m]);
        }
        if (!dead && !d.is_zero()) out += factor * d;
    }
    return out;
}

inline MultiPoly vertex_differential(int k, const MultiPoly& S, int out_nvars) {
    MultiPoly sum(out_nvars);
    const long d = S.weighted_degree();
    for (long j = 0; j <= d; ++j) {
        if (k + j < 0) continue;
        MultiPoly lowered = p_lowering_apply(static_cast<int>(j), S);
        if (lowered.is_zero()) continue;
        sum += p_poly(static_cast<int>(k + j), out_nvars) * lowered.extended(out_nvars);
    }
    return sum;
}

inline MultiPoly signed_schur_poly(const SignedPartition& s, int nvars) {
    if (s.is_zero()) return MultiPoly(nvars);
    MultiPoly p = schur(s.partition).polynomial.extended(nvars);
    return s.sign < 0 ? -p : p;
}

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    return Rational(num(rng), den(rng));
}

inline UniPoly random_unipoly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    const int d = deg(rng);
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) coeffs.push_back(random_rational(rng));
    return UniPoly(std::move(coeffs));
}

inline MultiPoly random_multipoly(std::mt19937& rng, int nvars, int max_exp, int terms) {
    MultiPoly p(nvars);
    std::uniform_int_distribution<int> exp(0, max_exp);
    for (int t = 0; t < terms; ++t) {
        ExpVec e(static_cast<size_t>(nvars));
        for (auto& x : e) x = exp(rng);
        p.add_term(e, random_rational(rng));
    }
    return p;
}

} // namespace p4::testing
