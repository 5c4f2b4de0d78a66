#include "fracsol/problem.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fracsol/errors.hpp"

namespace fracsol {

using nlohmann::json;

void FPDEProblem::validate() const {
    if (name.empty()) throw ValidationError("problem name must be nonempty", "name");
    if (!(alpha > 0.0) || alpha > 1.0)
        throw ValidationError("alpha must lie in (0, 1]", "alpha");
    if (!(domain.lo < domain.hi))
        throw ValidationError("spatial domain must satisfy lo < hi", "domain");
    for (const auto& lt : linear_op)
        if (lt.order < 0 || lt.order > 2)
            throw ValidationError("linear operator order must be 0, 1 or 2", "linear.order");
    int max_degree = 0;
    for (const auto& m : nonlinear_op) {
        if (m.u_pow < 0 || m.ux_pow < 0 || m.uxx_pow < 0)
            throw ValidationError("nonlinear monomial exponents must be nonnegative",
                                  "nonlinear");
        max_degree = std::max(max_degree, m.u_pow + m.ux_pow + m.uxx_pow);
    }
    if (!nonlinear_op.empty() && max_degree < 2)
        throw ValidationError("nonlinear operator must have total degree >= 2 or be empty",
                              "nonlinear");
    for (const auto& st : source)
        if (st.t_power < 0)
            throw ValidationError("source t-powers must be nonnegative integers",
                                  "source.tpower");
}

namespace {

Expr parse_field_expr(const json& j, const std::string& field) {
    if (!j.is_string()) throw ValidationError("expected an expression string", field);
    try {
        return parse(j.get<std::string>());
    } catch (const Error& e) {
        throw ParseError(std::string("bad expression in ") + field + ": " + e.what(), field);
    }
}

LoadedProblem from_json(const json& j, const std::string& origin) {
    LoadedProblem lp;
    FPDEProblem& p = lp.problem;

    if (!j.is_object()) throw ValidationError("problem document must be an object", origin);
    if (!j.contains("name") || !j["name"].is_string())
        throw ValidationError("missing string field", "name");
    p.name = j["name"].get<std::string>();

    if (!j.contains("alpha")) throw ValidationError("missing field", "alpha");
    if (j["alpha"].is_array()) {
        for (const auto& a : j["alpha"]) lp.alphas.push_back(a.get<double>());
    } else {
        lp.alphas.push_back(j["alpha"].get<double>());
    }
    if (lp.alphas.empty()) throw ValidationError("alpha list must be nonempty", "alpha");

    if (!j.contains("ic")) throw ValidationError("missing field", "ic");
    p.ic = parse_field_expr(j["ic"], "ic");

    if (j.contains("linear")) {
        for (const auto& lt : j["linear"]) {
            LinearTerm term;
            term.order = lt.at("order").get<int>();
            term.coeff = parse_field_expr(lt.at("coeff"), "linear.coeff");
            p.linear_op.push_back(term);
        }
    }
    if (j.contains("nonlinear")) {
        for (const auto& m : j["nonlinear"]) {
            NonlinearMonomial mono;
            mono.u_pow = m.value("u", 0);
            mono.ux_pow = m.value("ux", 0);
            mono.uxx_pow = m.value("uxx", 0);
            mono.coeff = parse_field_expr(m.at("coeff"), "nonlinear.coeff");
            p.nonlinear_op.push_back(mono);
        }
    }
    if (j.contains("source")) {
        for (const auto& st : j["source"]) {
            SourceTerm term;
            term.t_power = st.at("tpower").get<int>();
            term.coeff = parse_field_expr(st.at("coeff"), "source.coeff");
            p.source.push_back(term);
        }
    }

    if (!j.contains("domain") || !j["domain"].is_array() || j["domain"].size() != 2)
        throw ValidationError("domain must be [lo, hi]", "domain");
    p.domain.lo = j["domain"][0].get<double>();
    p.domain.hi = j["domain"][1].get<double>();

    const std::string form = j.value("form", "rhs");
    if (form == "rhs")
        p.form = EquationForm::Rhs;
    else if (form == "lhs")
        p.form = EquationForm::Lhs;
    else
        throw ValidationError("form must be \"rhs\" or \"lhs\"", "form");

    lp.default_terms = j.value("n", 5);
    if (lp.default_terms < 1) throw ValidationError("n must be >= 1", "n");

    p.alpha = lp.alphas.front();
    p.validate();
    for (double a : lp.alphas)
        if (!(a > 0.0) || a > 1.0) throw ValidationError("every alpha must lie in (0, 1]", "alpha");
    return lp;
}

} // namespace

LoadedProblem parse_problem_text(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(),
                         origin + ":byte " + std::to_string(e.byte));
    }
    try {
        return from_json(j, origin);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad problem document: ") + e.what(), origin);
    }
}

LoadedProblem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open problem file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str(), path);
}

} // namespace fracsol
