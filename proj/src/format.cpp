#include "p4/format.hpp"

#include <functional>
#include <sstream>

namespace p4 {

namespace {

std::string coeff_str(const Rational& c, OutputFormat fmt) {
    if (fmt == OutputFormat::Latex && !c.is_integer()) {
        Rational a = c.sign() < 0 ? -c : c;
        std::string s = "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
        return c.sign() < 0 ? "-" + s : s;
    }
    return c.str();
}

std::string power_str(const std::string& var, int k, OutputFormat fmt) {
    if (k == 0) return "";
    if (k == 1) return var;
    if (fmt == OutputFormat::Latex) return var + "^{" + std::to_string(k) + "}";
    return var + "^" + std::to_string(k);
}

// Append one signed term to an accumulating expression.
void append_term(std::string& out, const Rational& c, const std::string& monomial, OutputFormat fmt) {
    const bool leading = out.empty();
    Rational a = c.sign() < 0 ? -c : c;
    std::string sep = leading ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
    out += sep;
    if (monomial.empty()) {
        out += coeff_str(a, fmt);
        return;
    }
    if (a.is_one()) {
        out += monomial;
        return;
    }
    out += coeff_str(a, fmt);
    out += fmt == OutputFormat::Latex ? " " : "*";
    out += monomial;
}

} // namespace

std::string format_rational(const Rational& q, OutputFormat fmt) { return coeff_str(q, fmt); }

std::string format_unipoly(const UniPoly& p, OutputFormat fmt, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeff(k);
        if (c.is_zero()) continue;
        append_term(out, c, power_str(var, k, fmt), fmt);
    }
    return out;
}

std::string format_ratfunc(const UniRatFunc& r, OutputFormat fmt, const std::string& var) {
    if (r.is_polynomial()) {
        UniPoly p = (Rational(1) / r.den().coeff(0)) * r.num();
        return format_unipoly(p, fmt, var);
    }
    std::string num = format_unipoly(r.num(), fmt, var);
    std::string den = format_unipoly(r.den(), fmt, var);
    if (fmt == OutputFormat::Latex) return "\\frac{" + num + "}{" + den + "}";
    return "(" + num + ") / (" + den + ")";
}

namespace {

std::string format_multipoly_impl(const MultiPoly& p, OutputFormat fmt,
                                  const std::function<std::string(size_t)>& name_of) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += fmt == OutputFormat::Latex ? " " : "*";
            mono += power_str(name_of(i), e[i], fmt);
        }
        append_term(out, c, mono, fmt);
    }
    return out;
}

} // namespace

std::string format_multipoly(const MultiPoly& p, OutputFormat fmt, const std::string& var) {
    return format_multipoly_impl(p, fmt, [&](size_t i) {
        return fmt == OutputFormat::Latex ? var + "_{" + std::to_string(i + 1) + "}"
                                          : var + std::to_string(i + 1);
    });
}

std::string format_multipoly_named(const MultiPoly& p, OutputFormat fmt,
                                   std::span<const std::string> names) {
    return format_multipoly_impl(p, fmt, [&](size_t i) { return names[i]; });
}

nlohmann::json json_rational(const Rational& q) { return q.str(); }

nlohmann::json json_unipoly(const UniPoly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (int k = 0; k <= p.degree(); ++k) a.push_back(p.coeff(k).str());
    return a;
}

nlohmann::json json_ratfunc(const UniRatFunc& r) {
    return {{"num", json_unipoly(r.num())}, {"den", json_unipoly(r.den())}};
}

nlohmann::json json_multipoly(const MultiPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back({{"exponents", e}, {"coeff", c.str()}});
    }
    return {{"nvars", p.nvars()}, {"terms", terms}};
}

UniPoly unipoly_from_json(const nlohmann::json& j) {
    std::vector<Rational> coeffs;
    for (const auto& item : j) coeffs.push_back(Rational::parse(item.get<std::string>()));
    return UniPoly(std::move(coeffs));
}

} // namespace p4
