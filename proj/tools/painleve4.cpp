#include <array>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "p4/field.hpp"
#include "p4/format.hpp"
#include "p4/lattice.hpp"
#include "p4/partition.hpp"
#include "p4/schur.hpp"
#include "p4/verify.hpp"
#include "p4/weyl.hpp"

namespace {

using nlohmann::json;
using namespace p4;

OutputFormat parse_format(const std::string& s) {
    if (s == "plain") return OutputFormat::Plain;
    if (s == "latex") return OutputFormat::Latex;
    if (s == "json") return OutputFormat::Json;
    throw ParseError("unknown output format \"" + s + "\"");
}

const std::array<std::string, 6> kFieldVarNames = {"a0", "a1", "f0", "f1", "f2", "g"};
const std::array<std::string, 6> kFieldVarLatex = {"\\alpha_0", "\\alpha_1", "f_0",
                                                   "f_1",       "f_2",       "g"};

std::string format_field_elem(const FieldElem& e, OutputFormat fmt) {
    const auto& names = fmt == OutputFormat::Latex ? kFieldVarLatex : kFieldVarNames;
    const RationalFunction& v = e.value();
    std::string num = format_multipoly_named(v.num(), fmt, names);
    bool den_trivial = v.den().terms().size() == 1 && v.den().leading().is_one() &&
                       v.den().terms().begin()->first == ExpVec(6, 0);
    if (den_trivial) return num;
    std::string den = format_multipoly_named(v.den(), fmt, names);
    if (fmt == OutputFormat::Latex) return "\\frac{" + num + "}{" + den + "}";
    return "(" + num + ") / (" + den + ")";
}

json json_field_elem(const FieldElem& e) {
    return {{"num", json_multipoly(e.value().num())}, {"den", json_multipoly(e.value().den())},
            {"vars", kFieldVarNames}};
}

int emit_polynomial(const std::string& command, int m, int n, const std::string& route,
                    OutputFormat fmt) {
    const bool okamoto = command == "okamoto";
    UniPoly toda, schur_route;
    bool have_toda = false, have_schur = false;
    if (route == "toda" || route == "both") {
        toda = okamoto ? okamoto_Q(m, n) : hermite_H(m, n);
        have_toda = true;
    }
    if (route == "schur" || route == "both") {
        schur_route = okamoto ? okamoto_Q_schur(m, n) : hermite_H_schur(m, n);
        have_schur = true;
    }
    bool agree = !(have_toda && have_schur) || toda == schur_route;
    const UniPoly& value = have_toda ? toda : schur_route;

    if (fmt == OutputFormat::Json) {
        json j = {{"query", {{"command", command}, {"m", m}, {"n", n}, {"route", route}}},
                  {"result", json_unipoly(value)}};
        json routes;
        if (have_toda) routes["toda"] = json_unipoly(toda);
        if (have_schur) routes["schur"] = json_unipoly(schur_route);
        j["routes"] = routes;
        if (have_toda && have_schur)
            j["checks"] = json::array({{{"name", "route agreement"}, {"pass", agree}}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << format_unipoly(value, fmt) << "\n";
        if (have_toda && have_schur && !agree) {
            std::cerr << "route mismatch:\n  toda : " << format_unipoly(toda, fmt)
                      << "\n  schur: " << format_unipoly(schur_route, fmt) << "\n";
        }
    }
    return agree ? 0 : 1;
}

int cmd_schur(const std::string& text, OutputFormat fmt) {
    Partition lambda = Partition::parse(text);
    SchurValue s = schur(lambda);
    if (fmt == OutputFormat::Json) {
        json j = {{"query", {{"command", "schur"}, {"partition", lambda.str()}}},
                  {"result",
                   {{"partition", lambda.str()},
                    {"weight", lambda.weight()},
                    {"length", lambda.length()},
                    {"hook_product", lambda.hook_product().get_str()},
                    {"three_reduced", lambda.is_3_reduced()},
                    {"polynomial", json_multipoly(s.polynomial)}}}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << format_multipoly(s.polynomial, fmt) << "\n";
    }
    return 0;
}

int cmd_maya(int m, int n, OutputFormat fmt) {
    Partition lambda = lambda_mn(m, n);
    if (fmt == OutputFormat::Json) {
        MayaDiagram diagram = MayaDiagram::of_partition(lambda, lambda.length());
        json heads = json::array();
        for (long h : diagram.heads()) heads.push_back(h);
        json j = {{"query", {{"command", "maya"}, {"m", m}, {"n", n}}},
                  {"result",
                   {{"partition", lambda.str()},
                    {"weight", lambda.weight()},
                    {"maya", {{"cutoff", diagram.cutoff()}, {"heads", heads}}},
                    {"hook_product", lambda.hook_product().get_str()},
                    {"three_reduced", lambda.is_3_reduced()}}}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << lambda.str() << "\n";
    }
    return 0;
}

int cmd_backlund(const std::string& word_text, const std::string& target, OutputFormat fmt) {
    WeylWord w = WeylWord::parse(word_text);
    if (target == "alpha") {
        auto beta = weyl_apply_alphas(w);
        if (fmt == OutputFormat::Json) {
            json j = {{"query", {{"command", "backlund"}, {"word", w.str()}, {"target", target}}},
                      {"result", {{"alpha0", json_field_elem(beta[0])},
                                  {"alpha1", json_field_elem(beta[1])},
                                  {"alpha2", json_field_elem(beta[2])}}}};
            std::cout << j.dump(2) << "\n";
        } else {
            for (int i = 0; i < 3; ++i)
                std::cout << "alpha" << i << " -> "
                          << format_field_elem(beta[static_cast<size_t>(i)], fmt) << "\n";
        }
        return 0;
    }
    if (target != "f0" && target != "f1" && target != "f2")
        throw CLI::ValidationError("--target must be one of f0, f1, f2, alpha");
    int index = target[1] - '0';
    FieldElem image = weyl_apply(w, FieldElem::f(index));
    if (fmt == OutputFormat::Json) {
        json j = {{"query", {{"command", "backlund"}, {"word", w.str()}, {"target", target}}},
                  {"result", json_field_elem(image)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << format_field_elem(image, fmt) << "\n";
    }
    return 0;
}

int cmd_solution(const std::string& family_name, int m, int n, const std::string& kind_name,
                 OutputFormat fmt) {
    Family family;
    if (family_name == "okamoto") family = Family::Okamoto;
    else if (family_name == "hermite") family = Family::Hermite;
    else throw CLI::ValidationError("family must be okamoto or hermite");
    TripleKind kind = kind_name == "second" ? TripleKind::Second : TripleKind::First;

    TauLattice lat(family);
    SolutionTriple t = lat.f_triple(m, n, kind);
    SolutionVerdict v = verify_solution(t);

    if (fmt == OutputFormat::Json) {
        json j = {{"query",
                   {{"command", "solution"}, {"family", family_name}, {"m", m}, {"n", n},
                    {"kind", kind_name}}},
                  {"result",
                   {{"alphas", {json_rational(t.alphas[0]), json_rational(t.alphas[1]),
                                json_rational(t.alphas[2])}},
                    {"f", {json_ratfunc(t.f[0]), json_ratfunc(t.f[1]), json_ratfunc(t.f[2])}}}},
                  {"checks", json::array({{{"name", "solves the system"}, {"pass", v.ok}}})}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "alphas = (" << format_rational(t.alphas[0], fmt) << ", "
                  << format_rational(t.alphas[1], fmt) << ", " << format_rational(t.alphas[2], fmt)
                  << ")\n";
        for (int i = 0; i < 3; ++i)
            std::cout << "f" << i << " = " << format_ratfunc(t.f[static_cast<size_t>(i)], fmt)
                      << "\n";
        std::cout << (v.ok ? "verified: solves the system" : "FAILED verification") << "\n";
    }
    return v.ok ? 0 : 1;
}

int cmd_verify(const std::string& which, OutputFormat fmt) {
    auto suites = verify::run(which);
    bool all_ok = true;
    if (fmt == OutputFormat::Json) {
        json checks = json::array();
        for (const auto& suite : suites)
            for (const auto& c : suite.checks) {
                checks.push_back(
                    {{"suite", suite.name}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
                all_ok = all_ok && c.pass;
            }
        json j = {{"query", {{"command", "verify"}, {"suite", which}}}, {"checks", checks},
                  {"pass", all_ok}};
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& suite : suites)
            for (const auto& c : suite.checks) {
                all_ok = all_ok && c.pass;
                std::cout << (c.pass ? "PASS" : "FAIL") << "  " << suite.name << ": " << c.name;
                if (!c.detail.empty()) std::cout << " [" << c.detail << "]";
                std::cout << "\n";
            }
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact algebra of the symmetric Painleve IV system: rational solutions,\n"
                 "Backlund transformations, tau-function lattices, and Schur functions."};
    app.require_subcommand(1);
    std::string format_name = "plain";
    app.add_option("--format", format_name, "Output format: plain, latex, json")
        ->check(CLI::IsMember({"plain", "latex", "json"}));

    int m = 0, n = 0;
    std::string route = "toda", partition_text, word_text, target, family_name, kind_name = "first";
    std::string suite = "all";

    auto* okamoto = app.add_subcommand("okamoto", "Okamoto polynomial Q_{m,n}");
    okamoto->add_option("m", m)->required();
    okamoto->add_option("n", n)->required();
    okamoto->add_option("--route", route)->check(CLI::IsMember({"toda", "schur", "both"}));

    auto* hermite = app.add_subcommand("hermite", "Generalized Hermite polynomial H_{m,n}");
    hermite->add_option("m", m)->required();
    hermite->add_option("n", n)->required();
    hermite->add_option("--route", route)->check(CLI::IsMember({"toda", "schur", "both"}));

    auto* schur_cmd = app.add_subcommand("schur", "Schur function of a partition, e.g. \"(2,1,1)\"");
    schur_cmd->add_option("partition", partition_text)->required();

    auto* maya = app.add_subcommand("maya", "Partition attached to (m,n) via its Maya diagram");
    maya->add_option("m", m)->required();
    maya->add_option("n", n)->required();

    auto* backlund = app.add_subcommand("backlund", "Apply a Backlund word, e.g. \"s1 s0\" or \"T1^3 T2^-1\"");
    backlund->add_option("word", word_text)->required();
    backlund->add_option("--target", target, "f0, f1, f2, or alpha")->required();

    auto* solution = app.add_subcommand("solution", "Rational solution triple of a lattice cell");
    solution->add_option("family", family_name, "okamoto or hermite")->required();
    solution->add_option("m", m)->required();
    solution->add_option("n", n)->required();
    solution->add_option("--kind", kind_name)->check(CLI::IsMember({"first", "second"}));

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite (or \"all\")");
    verify_cmd->add_option("suite", suite, "suite name or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const OutputFormat fmt = parse_format(format_name);
        if (okamoto->parsed()) return emit_polynomial("okamoto", m, n, route, fmt);
        if (hermite->parsed()) return emit_polynomial("hermite", m, n, route, fmt);
        if (schur_cmd->parsed()) return cmd_schur(partition_text, fmt);
        if (maya->parsed()) return cmd_maya(m, n, fmt);
        if (backlund->parsed()) return cmd_backlund(word_text, target, fmt);
        if (solution->parsed()) return cmd_solution(family_name, m, n, kind_name, fmt);
        if (verify_cmd->parsed()) return cmd_verify(suite, fmt);
    } catch (const OutOfRegionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const DivisionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const SingularTransformError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
