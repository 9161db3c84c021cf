#include "p4/bilinear.hpp"

#include <utility>

namespace p4 {

BilinearOp& BilinearOp::plus(const UniPoly& coeff, int k) {
    if (k < 0) throw Error("negative power of D");
    if (coeff.is_zero()) return *this;
    auto [it, inserted] = terms_.emplace(k, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

namespace {

// D_x^k F.G expanded through the alternating Leibniz rule.
UniPoly hirota_power(int k, const std::vector<UniPoly>& dF, const std::vector<UniPoly>& dG) {
    UniPoly s;
    for (int j = 0; j <= k; ++j) {
        Rational c(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j)));
        if (j % 2 != 0) c = -c;
        s += c * (dF[static_cast<size_t>(k - j)] * dG[static_cast<size_t>(j)]);
    }
    return s;
}

std::vector<UniPoly> derivatives(const UniPoly& p, int upto) {
    std::vector<UniPoly> d;
    d.reserve(static_cast<size_t>(upto) + 1);
    d.push_back(p);
    for (int k = 1; k <= upto; ++k) d.push_back(d.back().derivative());
    return d;
}

} // namespace

UniPoly hirota(const BilinearOp& P, const UniPoly& F, const UniPoly& G) {
    const int K = P.max_power();
    auto dF = derivatives(F, K), dG = derivatives(G, K);
    UniPoly r;
    for (const auto& [k, coeff] : P.terms()) r += coeff * hirota_power(k, dF, dG);
    return r;
}

GaugedFn::GaugedFn(int eps_, Rational a_, UniPoly u_)
    : eps(eps_), a(std::move(a_)), u(std::move(u_)) {
    if (eps != 0 && eps != 1) throw Error("gauge flag must be 0 or 1");
}

GaugedFn gauged_mul(const GaugedFn& A, const GaugedFn& B) {
    if (A.is_zero() || B.is_zero()) return GaugedFn();
    if (A.eps != B.eps) throw GaugeMismatchError("gauge flags differ in product");
    return GaugedFn(A.eps, A.a + B.a, A.u * B.u);
}

GaugedFn gauged_divexact(const GaugedFn& A, const GaugedFn& B) {
    if (B.is_zero()) throw Error("division by zero gauged function");
    if (A.is_zero()) return GaugedFn();
    if (A.eps != B.eps) throw GaugeMismatchError("gauge flags differ in quotient");
    return GaugedFn(A.eps, A.a - B.a, exact_divide(A.u, B.u));
}

GaugedFn hirota_gauged(const BilinearOp& P, const GaugedFn& A, const GaugedFn& B) {
    if (A.eps != B.eps) throw GaugeMismatchError("gauge flags differ under bilinear operator");
    if (P.max_power() > 2) throw GaugeMismatchError("gauged bilinear operators support D^k only for k <= 2");
    if (A.is_zero() || B.is_zero()) return GaugedFn();

    const Rational delta = A.a - B.a;
    const UniPoly xp = UniPoly::x();
    const UniPoly uu = A.u * B.u;
    auto dA = A.u.derivative();
    auto dB = B.u.derivative();
    const UniPoly d1 = dA * B.u - A.u * dB;
    const UniPoly d2 = A.u.derivative().derivative() * B.u - Rational(2) * (dA * dB) +
                       A.u * B.u.derivative().derivative();

    UniPoly r;
    for (const auto& [k, coeff] : P.terms()) {
        UniPoly body;
        switch (k) {
        case 0:
            body = uu;
            break;
        case 1:
            body = d1 + delta * (xp * uu);
            break;
        case 2: {
            UniPoly quad = UniPoly::monomial(delta * delta - Rational(2L * A.eps), 2);
            body = d2 + (Rational(2) * delta) * (xp * d1) + quad * uu + (A.a + B.a) * uu;
            break;
        }
        default:
            throw GaugeMismatchError("gauged bilinear operators support D^k only for k <= 2");
        }
        r += coeff * body;
    }
    return GaugedFn(A.eps, A.a + B.a, r);
}

MultiBilinearOp& MultiBilinearOp::plus(const Rational& c, ExpVec powers) {
    if (!c.is_zero()) terms.push_back({c, std::move(powers)});
    return *this;
}

namespace {

MultiPoly multi_derivative(const MultiPoly& p, const ExpVec& order) {
    MultiPoly d = p;
    for (size_t i = 0; i < order.size(); ++i)
        for (int k = 0; k < order[i]; ++k) d = d.partial(static_cast<int>(i));
    return d;
}

} // namespace

MultiPoly hirota_multi(const MultiBilinearOp& P, const MultiPoly& F, const MultiPoly& G) {
    if (F.nvars() != G.nvars()) throw Error("mixed variable counts");
    const int n = F.nvars();
    MultiPoly r(n);
    for (const auto& term : P.terms) {
        ExpVec K = term.powers;
        K.resize(static_cast<size_t>(n), 0);
        // Enumerate all J <= K componentwise.
        ExpVec J(K.size(), 0);
        while (true) {
            Rational c = term.coeff;
            long tot = 0;
            for (size_t i = 0; i < K.size(); ++i) {
                c *= Rational(binomial(static_cast<unsigned long>(K[i]), static_cast<unsigned long>(J[i])));
                tot += J[i];
            }
            if (tot % 2 != 0) c = -c;
            ExpVec KJ(K.size());
            for (size_t i = 0; i < K.size(); ++i) KJ[i] = K[i] - J[i];
            r += c * (multi_derivative(F, KJ) * multi_derivative(G, J));

            size_t i = 0;
            while (i < K.size() && J[i] == K[i]) J[i++] = 0;
            if (i == K.size()) break;
            ++J[i];
        }
    }
    return r;
}

} // namespace p4
