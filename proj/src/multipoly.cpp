#include "p4/multipoly.hpp"

#include <algorithm>

namespace p4 {

namespace {
const Rational kZero(0);

long total_degree(const ExpVec& e) {
    long s = 0;
    for (int x : e) s += x;
    return s;
}
} // namespace

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(ExpVec(static_cast<size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::var(int nvars, int i) {
    if (i < 0 || i >= nvars) throw Error("variable index out of range");
    MultiPoly p(nvars);
    ExpVec e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(i)] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Rational MultiPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::max_exponent(int i) const {
    int m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e[static_cast<size_t>(i)]);
    return m;
}

long MultiPoly::weighted_degree() const {
    long d = 0;
    for (const auto& [e, c] : terms_) {
        long w = 0;
        for (size_t i = 0; i < e.size(); ++i) w += static_cast<long>(e[i]) * static_cast<long>(i + 1);
        d = std::max(d, w);
    }
    return d;
}

bool MultiPoly::is_weight_homogeneous() const {
    bool first = true;
    long d0 = 0;
    for (const auto& [e, c] : terms_) {
        long w = 0;
        for (size_t i = 0; i < e.size(); ++i) w += static_cast<long>(e[i]) * static_cast<long>(i + 1);
        if (first) {
            d0 = w;
            first = false;
        } else if (w != d0) {
            return false;
        }
    }
    return true;
}

void MultiPoly::add_term(const ExpVec& e, const Rational& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(e.size()) != nvars_) throw Error("exponent vector has wrong length");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw Error("mixed variable counts");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw Error("mixed variable counts");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw Error("mixed variable counts");
    MultiPoly r(a.nvars_);
    ExpVec e(static_cast<size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
    if (c.is_zero()) return MultiPoly(p.nvars_);
    MultiPoly r = p;
    for (auto& [e, x] : r.terms_) x *= c;
    return r;
}

MultiPoly MultiPoly::partial(int i) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<size_t>(i)];
        if (k == 0) continue;
        ExpVec d = e;
        d[static_cast<size_t>(i)] = k - 1;
        r.add_term(d, Rational(k) * c);
    }
    return r;
}

MultiPoly MultiPoly::extended(int nvars) const {
    if (nvars < nvars_) throw Error("cannot shrink variable count");
    if (nvars == nvars_) return *this;
    MultiPoly r(nvars);
    for (const auto& [e, c] : terms_) {
        ExpVec d = e;
        d.resize(static_cast<size_t>(nvars), 0);
        r.terms_.emplace(std::move(d), c);
    }
    return r;
}

UniPoly MultiPoly::substitute_x_c(const Rational& c) const {
    UniPoly r;
    for (const auto& [e, coef] : terms_) {
        bool higher = false;
        for (size_t i = 2; i < e.size(); ++i)
            if (e[i] != 0) { higher = true; break; }
        if (higher) continue;
        Rational value = coef;
        if (e.size() >= 2 && e[1] != 0) value *= c.pow(e[1]);
        r += UniPoly::monomial(value, e.empty() ? 0 : e[0]);
    }
    return r;
}

const Rational& MultiPoly::leading() const {
    if (terms_.empty()) return kZero;
    return terms_.rbegin()->second;
}

RationalFunction::RationalFunction(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::constant(num_.nvars(), Rational(1))) {}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

RationalFunction RationalFunction::constant(int nvars, const Rational& c) {
    return RationalFunction(MultiPoly::constant(nvars, c));
}

RationalFunction RationalFunction::var(int nvars, int i) {
    return RationalFunction(MultiPoly::var(nvars, i));
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    if (num_.nvars() != den_.nvars()) throw Error("mixed variable counts");
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(num_.nvars(), Rational(1));
        return;
    }
    const Rational lead = den_.leading();
    if (!lead.is_one()) {
        Rational inv = Rational(1) / lead;
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw Error("division by zero rational function");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

bool RationalFunction::equals(const RationalFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

RationalFunction substitute(const MultiPoly& p, std::span<const RationalFunction> images) {
    const int n = p.nvars();
    if (static_cast<int>(images.size()) != n) throw Error("wrong number of substitution images");
    if (p.is_zero()) {
        return images.empty() ? RationalFunction() : RationalFunction::constant(images[0].nvars(), Rational(0));
    }
    const int target = images.empty() ? 0 : images[0].nvars();

    // Clear denominators once: p(N/D) = sum_m c_m prod N_i^{e_i} D_i^{E_i - e_i} / prod D_i^{E_i}.
    std::vector<int> maxExp(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) maxExp[static_cast<size_t>(i)] = p.max_exponent(i);

    std::vector<std::vector<MultiPoly>> npow(static_cast<size_t>(n)), dpow(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int e = maxExp[static_cast<size_t>(i)];
        auto& np = npow[static_cast<size_t>(i)];
        auto& dp = dpow[static_cast<size_t>(i)];
        np.reserve(static_cast<size_t>(e) + 1);
        dp.reserve(static_cast<size_t>(e) + 1);
        np.push_back(MultiPoly::constant(target, Rational(1)));
        dp.push_back(MultiPoly::constant(target, Rational(1)));
        for (int k = 1; k <= e; ++k) {
            np.push_back(np.back() * images[static_cast<size_t>(i)].num());
            dp.push_back(dp.back() * images[static_cast<size_t>(i)].den());
        }
    }

    MultiPoly num(target), den = MultiPoly::constant(target, Rational(1));
    for (int i = 0; i < n; ++i)
        den = den * dpow[static_cast<size_t>(i)][static_cast<size_t>(maxExp[static_cast<size_t>(i)])];
    for (const auto& [e, c] : p.terms()) {
        MultiPoly term = MultiPoly::constant(target, c);
        for (int i = 0; i < n; ++i) {
            const size_t ei = static_cast<size_t>(e[static_cast<size_t>(i)]);
            term = term * npow[static_cast<size_t>(i)][ei];
            term = term * dpow[static_cast<size_t>(i)][static_cast<size_t>(maxExp[static_cast<size_t>(i)]) - ei];
        }
        num += term;
    }
    return RationalFunction(std::move(num), std::move(den));
}

RationalFunction substitute(const RationalFunction& r, std::span<const RationalFunction> images) {
    RationalFunction num = substitute(r.num(), images);
    RationalFunction den = substitute(r.den(), images);
    return num / den;
}

} // namespace p4
