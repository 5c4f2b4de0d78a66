#include "fracsol/series_io.hpp"

#include <json.hpp>

#include "fracsol/errors.hpp"

namespace fracsol {

using nlohmann::json;

namespace {

json series_to_json(const TimePowerSeries& s) {
    json doc;
    doc["alpha"] = s.alpha();
    doc["domain"] = {s.domain().lo, s.domain().hi};
    doc["terms"] = json::array();
    for (const auto& t : s.terms()) {
        doc["terms"].push_back({{"const_part", t.exponent.const_part.str()},
                                {"alpha_mult", t.exponent.alpha_mult},
                                {"coeff", t.coeff.str()}});
    }
    return doc;
}

Rational rational_from_str(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

TimePowerSeries series_from_json(const json& doc) {
    const double alpha = doc.at("alpha").get<double>();
    SpatialDomain domain{doc.at("domain")[0].get<double>(), doc.at("domain")[1].get<double>()};
    std::vector<SeriesTerm> terms;
    for (const auto& t : doc.at("terms")) {
        AlphaExponent mu{rational_from_str(t.at("const_part").get<std::string>()),
                         t.at("alpha_mult").get<int>()};
        terms.push_back({mu, parse(t.at("coeff").get<std::string>())});
    }
    return TimePowerSeries(alpha, domain, std::move(terms));
}

} // namespace

std::string series_to_text(const TimePowerSeries& s) { return series_to_json(s).dump(2); }

TimePowerSeries series_from_text(const std::string& text) {
    try {
        return series_from_json(json::parse(text));
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid series document: ") + e.what(), "series");
    }
}

std::string solution_to_text(const SeriesSolution& sol) {
    json doc;
    doc["problem"] = sol.problem_name;
    doc["alpha"] = sol.alpha;
    doc["n"] = sol.n_terms;
    doc["terms"] = json::array();
    for (const auto& t : sol.terms) doc["terms"].push_back(series_to_json(t));
    doc["partial_sum"] = series_to_json(sol.partial_sum);
    return doc.dump(2);
}

SeriesSolution solution_from_text(const std::string& text) {
    try {
        const json doc = json::parse(text);
        SeriesSolution sol;
        sol.problem_name = doc.at("problem").get<std::string>();
        sol.alpha = doc.at("alpha").get<double>();
        sol.n_terms = doc.at("n").get<int>();
        for (const auto& t : doc.at("terms")) sol.terms.push_back(series_from_json(t));
        sol.partial_sum = series_from_json(doc.at("partial_sum"));
        return sol;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid solution document: ") + e.what(), "solution");
    }
}

} // namespace fracsol
