#include "p4/schur.hpp"

#include <algorithm>
#include <map>

namespace p4 {

MultiPoly p_poly(int n, int nvars) {
    if (n < 0) return MultiPoly(nvars);
    if (n == 0) return MultiPoly::constant(nvars, Rational(1));
    if (nvars < n) throw Error("p_n needs at least n variables");

    // Monomials t_1^{k_1} ... t_n^{k_n} / (k_1! ... k_n!) over k_1 + 2 k_2 + ... = n.
    MultiPoly r(nvars);
    ExpVec e(static_cast<size_t>(nvars), 0);
    auto rec = [&](auto&& self, int remaining, int part, const Rational& coeff) -> void {
        if (remaining == 0) {
            r.add_term(e, coeff);
            return;
        }
        if (part > remaining) return;
        self(self, remaining, part + 1, coeff); // k_part = 0
        Rational c = coeff;
        for (int k = 1; part * k <= remaining; ++k) {
            c /= Rational(k);
            e[static_cast<size_t>(part - 1)] = k;
            self(self, remaining - part * k, part + 1, c);
        }
        e[static_cast<size_t>(part - 1)] = 0;
    };
    rec(rec, n, 1, Rational(1));
    return r;
}

UniPoly p_specialized(int n, const Rational& c) {
    if (n < 0) return UniPoly();
    UniPoly r;
    for (int k2 = 0; 2 * k2 <= n; ++k2) {
        int k1 = n - 2 * k2;
        Rational coeff = c.pow(k2) / Rational(factorial(static_cast<unsigned long>(k1)) *
                                              factorial(static_cast<unsigned long>(k2)));
        r += UniPoly::monomial(coeff, k1);
    }
    return r;
}

namespace {

// det of rows 0..popcount(mask)-1 on the column set `mask`, by Laplace
// expansion along the last row, memoized over column subsets.
MultiPoly det_by_masks(const std::vector<std::vector<MultiPoly>>& entry, int nvars) {
    const int l = static_cast<int>(entry.size());
    const size_t full = (size_t{1} << l);
    std::vector<MultiPoly> det(full, MultiPoly(nvars));
    det[0] = MultiPoly::constant(nvars, Rational(1));
    std::vector<size_t> order(full);
    for (size_t m = 0; m < full; ++m) order[m] = m;
    std::sort(order.begin(), order.end(), [](size_t a, size_t b) {
        int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
        return pa != pb ? pa < pb : a < b;
    });
    for (size_t mask : order) {
        int k = __builtin_popcountll(mask);
        if (k == 0) continue;
        MultiPoly acc(nvars);
        int pos = 0;
        for (int j = 0; j < l; ++j) {
            if (!(mask >> j & 1)) continue;
            const MultiPoly& e = entry[static_cast<size_t>(k - 1)][static_cast<size_t>(j)];
            if (!e.is_zero()) {
                MultiPoly t = e * det[mask ^ (size_t{1} << j)];
                if ((k - 1 + pos) % 2 != 0) t = -t;
                acc += t;
            }
            ++pos;
        }
        det[mask] = std::move(acc);
    }
    return det[full - 1];
}

} // namespace

SchurValue schur(const Partition& lambda) {
    const int l = lambda.length();
    const int nvars = std::max(1L, lambda.weight());
    if (l == 0) return {lambda, MultiPoly::constant(nvars, Rational(1))};

    std::map<int, MultiPoly> pcache;
    auto p = [&](int n) -> const MultiPoly& {
        auto it = pcache.find(n);
        if (it == pcache.end()) it = pcache.emplace(n, p_poly(n, nvars)).first;
        return it->second;
    };
    std::vector<std::vector<MultiPoly>> entry(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i) {
        entry[static_cast<size_t>(i)].reserve(static_cast<size_t>(l));
        for (int j = 0; j < l; ++j)
            entry[static_cast<size_t>(i)].push_back(p(lambda.part(i + 1) - (i + 1) + (j + 1)));
    }
    return {lambda, det_by_masks(entry, nvars)};
}

UniPoly specialize(const SchurValue& s, const Rational& c) {
    return s.polynomial.substitute_x_c(c);
}

namespace {

// Exact determinant of a rational matrix by Gaussian elimination.
Rational det_rational(std::vector<std::vector<Rational>> m) {
    const size_t l = m.size();
    Rational det(1);
    for (size_t col = 0; col < l; ++col) {
        size_t pivot = col;
        while (pivot < l && m[pivot][col].is_zero()) ++pivot;
        if (pivot == l) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational inv = Rational(1) / m[col][col];
        for (size_t row = col + 1; row < l; ++row) {
            if (m[row][col].is_zero()) continue;
            Rational f = m[row][col] * inv;
            for (size_t j = col; j < l; ++j) m[row][j] -= f * m[col][j];
        }
    }
    return det;
}

// Newton interpolation through (i, y_i), i = 0..d.
UniPoly interpolate_at_integers(const std::vector<Rational>& y) {
    const size_t n = y.size();
    std::vector<Rational> dd = y;
    for (size_t k = 1; k < n; ++k)
        for (size_t i = n - 1; i >= k; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(k));
    UniPoly p(dd[n - 1]);
    for (size_t k = n - 1; k-- > 0;) {
        UniPoly shift{std::vector<Rational>{Rational(-static_cast<long>(k)), Rational(1)}};
        p = p * shift + UniPoly(dd[k]);
    }
    return p;
}

} // namespace

UniPoly schur_specialized(const Partition& lambda, const Rational& c) {
    const int l = lambda.length();
    if (l == 0) return UniPoly(Rational(1));
    std::vector<std::vector<UniPoly>> entry(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            entry[static_cast<size_t>(i)].push_back(p_specialized(lambda.part(i + 1) - (i + 1) + (j + 1), c));

    // The determinant has degree at most |lambda|; evaluate and interpolate.
    const long d = lambda.weight();
    std::vector<Rational> values;
    values.reserve(static_cast<size_t>(d) + 1);
    std::vector<std::vector<Rational>> m(static_cast<size_t>(l), std::vector<Rational>(static_cast<size_t>(l)));
    for (long x = 0; x <= d; ++x) {
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    entry[static_cast<size_t>(i)][static_cast<size_t>(j)].eval(Rational(x));
        values.push_back(det_rational(m));
    }
    return interpolate_at_integers(values);
}

SignedPartition vertex_apply(int k, const Partition& lambda, int slots) {
    MayaDiagram m = MayaDiagram::of_partition(lambda, slots);
    const long pos = k + slots;
    if (m.contains(pos)) return SignedPartition::zero();
    int above = 0;
    for (long h : m.heads())
        if (h > pos) ++above;
    SignedPartition r;
    r.sign = (above % 2 == 0) ? +1 : -1;
    r.partition = m.with_added(pos).to_partition();
    return r;
}

SignedPartition vertex_apply(int k, const Partition& lambda) {
    return vertex_apply(k, lambda, lambda.length());
}

SignedPartition vertex_apply(int k, const SignedPartition& s, int slots) {
    if (s.is_zero()) return SignedPartition::zero();
    SignedPartition r = vertex_apply(k, s.partition, slots);
    if (!r.is_zero()) r.sign *= s.sign;
    return r;
}

SignedPartition vertex_apply_chain(std::span<const int> ks) {
    SignedPartition cur = SignedPartition::plus(Partition());
    int slots = 0;
    for (size_t i = ks.size(); i-- > 0;) {
        cur = vertex_apply(ks[i], cur, slots);
        if (cur.is_zero()) return cur;
        ++slots;
    }
    return cur;
}

Integer okamoto_normalization(int m, int n) { return lambda_mn(m, n).hook_product(); }

Rational hermite_normalization(int m, int n) {
    if (m < 0 || n < 0) throw Error("hermite normalization needs m, n >= 0");
    const long mn = m + n;
    Integer value = pow(Integer(3), static_cast<unsigned long>(mn * (mn - 1) / 2));
    value *= superfactorial(mn - 1);
    if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) value = -value;
    return Rational(value);
}

} // namespace p4
