#include "p4/unipoly.hpp"

#include <algorithm>

namespace p4 {

namespace {
const Rational kZero(0);
}

UniPoly::UniPoly(const Rational& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, int k) {
    UniPoly p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<size_t>(k) + 1, Rational(0));
    p.c_.back() = c;
    return p;
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
}

const Rational& UniPoly::leading() const {
    if (is_zero()) return kZero;
    return c_.back();
}

bool UniPoly::has_integer_coeffs() const {
    for (const auto& c : c_)
        if (!c.is_integer()) return false;
    return true;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
    if (c.is_zero()) return UniPoly();
    UniPoly r = p;
    for (auto& x : r.c_) x *= c;
    return r;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return UniPoly(std::move(r));
}

Rational UniPoly::eval(const Rational& x) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly r{Rational(1)};
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    UniPoly rem = a;
    if (a.degree() < b.degree()) return {UniPoly(), rem};
    std::vector<Rational> q(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int k = rem.degree() - b.degree();
        Rational c = rem.leading() / b.leading();
        q[static_cast<size_t>(k)] = c;
        rem -= UniPoly::monomial(c, k) * b;
    }
    return {UniPoly(std::move(q)), rem};
}

UniPoly exact_divide(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw DivisionError("polynomial division left a remainder", r);
    return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly u = a, v = b;
    while (!v.is_zero()) {
        UniPoly r = divmod(u, v).second;
        u = std::move(v);
        v = std::move(r);
    }
    if (!u.is_zero()) u = (Rational(1) / u.leading()) * u;
    return u;
}

UniRatFunc::UniRatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void UniRatFunc::normalize() {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = UniPoly(Rational(1));
        return;
    }
    UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_divide(num_, g);
        den_ = exact_divide(den_, g);
    }
    Rational lead = den_.leading();
    if (!lead.is_one()) {
        Rational inv = Rational(1) / lead;
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

UniRatFunc UniRatFunc::operator-() const {
    UniRatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

UniRatFunc& UniRatFunc::operator+=(const UniRatFunc& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

UniRatFunc& UniRatFunc::operator-=(const UniRatFunc& o) { return *this += -o; }

UniRatFunc& UniRatFunc::operator*=(const UniRatFunc& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

UniRatFunc& UniRatFunc::operator/=(const UniRatFunc& o) {
    if (o.is_zero()) throw Error("division by zero rational function");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

UniRatFunc UniRatFunc::derivative() const {
    UniPoly n = num_.derivative() * den_ - num_ * den_.derivative();
    return UniRatFunc(std::move(n), den_ * den_);
}

UniRatFunc UniRatFunc::pow(long e) const {
    if (e == 0) return UniRatFunc(Rational(1));
    UniRatFunc base = *this;
    if (e < 0) {
        base = UniRatFunc(Rational(1)) / base;
        e = -e;
    }
    UniRatFunc r(Rational(1));
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace p4
