#pragma once

#include <span>

#include "p4/multipoly.hpp"
#include "p4/partition.hpp"
#include "p4/unipoly.hpp"

namespace p4 {

// p_n from exp(sum_k t_k z^k) = sum_n p_n(t) z^n; zero for n < 0.
// Requires nvars >= n for n >= 1.
MultiPoly p_poly(int n, int nvars);
// p_n(x, c, 0, 0, ...).
UniPoly p_specialized(int n, const Rational& c);

struct SchurValue {
    Partition partition;
    MultiPoly polynomial; // weight-homogeneous of degree |lambda| under deg t_k = k
};

// Schur function as the determinant det(p_{lambda_i - i + j}), expanded
// exactly in max(1, |lambda|) variables.
SchurValue schur(const Partition& lambda);

// Substitute t_1 = x, t_2 = c, t_k = 0 (k >= 3).
UniPoly specialize(const SchurValue& s, const Rational& c);

// Same value as specialize(schur(lambda), c), computed by specializing the
// determinant entries first and interpolating the determinant exactly.
UniPoly schur_specialized(const Partition& lambda, const Rational& c);

// Partition with a sign, or the distinguished zero value (sign = 0).
struct SignedPartition {
    int sign = 0;
    Partition partition;

    static SignedPartition zero() { return {}; }
    static SignedPartition plus(Partition p) { return {+1, std::move(p)}; }
    bool is_zero() const { return sign == 0; }

    friend bool operator==(const SignedPartition& a, const SignedPartition& b) {
        if (a.sign == 0 || b.sign == 0) return a.sign == 0 && b.sign == 0;
        return a.sign == b.sign && a.partition == b.partition;
    }
    friend bool operator!=(const SignedPartition& a, const SignedPartition& b) { return !(a == b); }
};

inline SignedPartition operator-(SignedPartition s) {
    s.sign = -s.sign;
    return s;
}

// Combinatorial action of the degree-raising operator X_k on the Schur basis:
// add a bead at position k + slots to the Maya diagram of lambda, with the
// sign given by the parity of the number of occupied positions above it.
SignedPartition vertex_apply(int k, const Partition& lambda, int slots);
SignedPartition vertex_apply(int k, const Partition& lambda); // slots = length
SignedPartition vertex_apply(int k, const SignedPartition& s, int slots);

// X_{ks[0]} ... X_{ks[last]} . 1, applied right to left from the empty
// partition.
SignedPartition vertex_apply_chain(std::span<const int> ks);

// Hook-length product of lambda(m, n); the factor that makes the specialized
// Schur function monic.
Integer okamoto_normalization(int m, int n);
// (-1)^{n(n-1)/2} 3^{(m+n)(m+n-1)/2} (m+n-1)^!  for m, n >= 0.
Rational hermite_normalization(int m, int n);

} // namespace p4
