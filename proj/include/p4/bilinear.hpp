#pragma once

#include <map>
#include <vector>

#include "p4/multipoly.hpp"
#include "p4/unipoly.hpp"

namespace p4 {

// Bilinear operator sum_k c_k(x) D_x^k with polynomial coefficients and at
// most one term per power of D_x.
class BilinearOp {
public:
    BilinearOp() = default;
    static BilinearOp D(int k) { return BilinearOp().plus(UniPoly(Rational(1)), k); }

    BilinearOp& plus(const UniPoly& coeff, int k);
    const std::map<int, UniPoly>& terms() const { return terms_; }
    int max_power() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

private:
    std::map<int, UniPoly> terms_;
};

// P(D_x) F.G with D_x^k F.G = sum_j (-1)^j C(k,j) F^(k-j) G^(j).
UniPoly hirota(const BilinearOp& P, const UniPoly& F, const UniPoly& G);

// Polynomial u carrying the gauge factor exp(-eps x^4/12 + a x^2/2).
// u = 0 represents the zero function regardless of the gauge parameters.
struct GaugedFn {
    int eps = 0;
    Rational a;
    UniPoly u;

    GaugedFn() = default;
    GaugedFn(int eps, Rational a, UniPoly u);

    bool is_zero() const { return u.is_zero(); }
    friend bool operator==(const GaugedFn& x, const GaugedFn& y) {
        if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
        return x.eps == y.eps && x.a == y.a && x.u == y.u;
    }
    friend bool operator!=(const GaugedFn& x, const GaugedFn& y) { return !(x == y); }
};

// Plain product; gauge parameters add. The eps flags must agree.
GaugedFn gauged_mul(const GaugedFn& A, const GaugedFn& B);
// Quotient with exact polynomial division; gauge parameters subtract.
GaugedFn gauged_divexact(const GaugedFn& A, const GaugedFn& B);

// P(D_x) applied to a pair of gauged functions.  Only powers 0, 1, 2 of D_x
// are supported; the eps flags must agree.  The gauge terms follow from the
// Leibniz rules
//   D(g1 u1 . g2 u2)  = g1 g2 [ D(u1.u2) + (a1-a2) x u1 u2 ]
//   D^2(g1 u1 . g2 u2) = g1 g2 [ D^2(u1.u2) + 2 (a1-a2) x D(u1.u2)
//                                + ((a1-a2)^2 x^2 - 2 eps x^2 + a1 + a2) u1 u2 ].
GaugedFn hirota_gauged(const BilinearOp& P, const GaugedFn& A, const GaugedFn& B);

// Bilinear operator in the multivariate Hirota symbols D_{t_1}, D_{t_2}, ...
struct MultiBilinearOp {
    struct Term {
        Rational coeff;
        ExpVec powers; // powers[i] = exponent of D_{t_{i+1}}
    };
    std::vector<Term> terms;

    MultiBilinearOp& plus(const Rational& c, ExpVec powers);
};

MultiPoly hirota_multi(const MultiBilinearOp& P, const MultiPoly& F, const MultiPoly& G);

} // namespace p4
