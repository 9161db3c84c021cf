#pragma once

#include <string>

#include "p4/multipoly.hpp"
#include "p4/unipoly.hpp"

#include <json.hpp>

namespace p4 {

enum class OutputFormat { Plain, Latex, Json };

// Plain: "x^4 - 2*x^2 - 1".  Latex: "x^{4} - 2 x^{2} - 1", rational
// coefficients as \frac{p}{q}.  Both use descending powers.
std::string format_unipoly(const UniPoly& p, OutputFormat fmt, const std::string& var = "x");
std::string format_ratfunc(const UniRatFunc& r, OutputFormat fmt, const std::string& var = "x");
// Terms in descending canonical order, variables var1, var2, ...
std::string format_multipoly(const MultiPoly& p, OutputFormat fmt, const std::string& var = "t");
// Same with one explicit name per variable.
std::string format_multipoly_named(const MultiPoly& p, OutputFormat fmt,
                                   std::span<const std::string> names);
std::string format_rational(const Rational& q, OutputFormat fmt);

// JSON forms: Rational as its "p/q" string, UniPoly as the coefficient list
// lowest degree first.
nlohmann::json json_rational(const Rational& q);
nlohmann::json json_unipoly(const UniPoly& p);
nlohmann::json json_ratfunc(const UniRatFunc& r);
nlohmann::json json_multipoly(const MultiPoly& p);

UniPoly unipoly_from_json(const nlohmann::json& j);

} // namespace p4
