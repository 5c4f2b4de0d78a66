#include "fracsol/series.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "fracsol/errors.hpp"
#include "fracsol/gamma.hpp"

namespace fracsol {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw DomainError("fractional order must lie in (0, 1], got " + std::to_string(alpha));
}

void check_same_alpha(double a, double b) {
    if (a != b)
        throw AlphaMismatch("series have different fractional orders: " + std::to_string(a) +
                            " vs " + std::to_string(b));
}

std::tuple<double, int, std::int64_t, std::int64_t> sort_key(const AlphaExponent& mu,
                                                             double alpha) {
    return {mu.value(alpha), mu.alpha_mult, mu.const_part.num(), mu.const_part.den()};
}

} // namespace

std::string AlphaExponent::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (!const_part.is_zero()) out += const_part.str();
    if (alpha_mult != 0) {
        if (!out.empty()) out += "+";
        if (alpha_mult != 1) out += std::to_string(alpha_mult) + "*";
        out += "alpha";
    }
    return out;
}

TimePowerSeries::TimePowerSeries(double alpha, SpatialDomain domain,
                                 std::vector<SeriesTerm> terms)
    : alpha_(alpha), domain_(domain) {
    check_alpha(alpha);
    if (!(domain.lo < domain.hi)) throw DomainError("spatial domain must be nonempty");
    // merge exact-equal exponent keys, preserving first-seen order
    std::vector<std::pair<AlphaExponent, std::vector<Expr>>> merged;
    for (auto& t : terms) {
        if (t.exponent.alpha_mult < 0 || t.exponent.const_part < Rational(0))
            throw DomainError("series exponents must be nonnegative");
        auto it = std::find_if(merged.begin(), merged.end(),
                               [&](const auto& m) { return m.first == t.exponent; });
        if (it == merged.end())
            merged.push_back({t.exponent, {t.coeff}});
        else
            it->second.push_back(t.coeff);
    }
    for (auto& [mu, coeffs] : merged) {
        Expr c = Expr::add(std::move(coeffs)).simplify_basic();
        if (is_negligible(c, domain_.lo, domain_.hi, kPruneThreshold, kCanonicalPoints))
            continue;
        terms_.push_back({mu, c});
    }
    std::sort(terms_.begin(), terms_.end(), [&](const SeriesTerm& a, const SeriesTerm& b) {
        return sort_key(a.exponent, alpha_) < sort_key(b.exponent, alpha_);
    });
}

TimePowerSeries TimePowerSeries::zero(double alpha, SpatialDomain domain) {
    return TimePowerSeries(alpha, domain, {});
}

TimePowerSeries TimePowerSeries::single(double alpha, SpatialDomain domain, AlphaExponent mu,
                                        Expr coeff) {
    return TimePowerSeries(alpha, domain, {{mu, std::move(coeff)}});
}

std::optional<Expr> TimePowerSeries::coefficient(const AlphaExponent& mu) const {
    for (const auto& t : terms_)
        if (t.exponent == mu) return t.coeff;
    return std::nullopt;
}

TimePowerSeries series_add(const TimePowerSeries& s1, const TimePowerSeries& s2) {
    check_same_alpha(s1.alpha(), s2.alpha());
    std::vector<SeriesTerm> terms = s1.terms();
    terms.insert(terms.end(), s2.terms().begin(), s2.terms().end());
    return TimePowerSeries(s1.alpha(), s1.domain(), std::move(terms));
}

TimePowerSeries series_mul(const TimePowerSeries& s1, const TimePowerSeries& s2,
                           std::optional<int> max_order) {
    check_same_alpha(s1.alpha(), s2.alpha());
    std::vector<SeriesTerm> terms;
    for (const auto& a : s1.terms()) {
        for (const auto& b : s2.terms()) {
            AlphaExponent mu{a.exponent.const_part + b.exponent.const_part,
                             a.exponent.alpha_mult + b.exponent.alpha_mult};
            if (max_order && mu.alpha_mult > *max_order) continue;
            terms.push_back({mu, a.coeff * b.coeff});
        }
    }
    return TimePowerSeries(s1.alpha(), s1.domain(), std::move(terms));
}

TimePowerSeries series_scale(const TimePowerSeries& s, const Expr& g) {
    std::vector<SeriesTerm> terms;
    terms.reserve(s.terms().size());
    for (const auto& t : s.terms()) terms.push_back({t.exponent, g * t.coeff});
    return TimePowerSeries(s.alpha(), s.domain(), std::move(terms));
}

TimePowerSeries series_diff_x(const TimePowerSeries& s, int order) {
    if (order < 0) throw DomainError("spatial derivative order must be nonnegative");
    std::vector<SeriesTerm> terms;
    terms.reserve(s.terms().size());
    for (const auto& t : s.terms()) terms.push_back({t.exponent, t.coeff.differentiate(order)});
    return TimePowerSeries(s.alpha(), s.domain(), std::move(terms));
}

TimePowerSeries frac_integral(const TimePowerSeries& s, double alpha) {
    check_alpha(alpha);
    check_same_alpha(s.alpha(), alpha);
    std::vector<SeriesTerm> terms;
    terms.reserve(s.terms().size());
    for (const auto& t : s.terms()) {
        const double mu = t.exponent.value(alpha);
        const double ratio = special::gamma_ratio(mu + 1.0, mu + alpha + 1.0);
        AlphaExponent shifted{t.exponent.const_part, t.exponent.alpha_mult + 1};
        terms.push_back({shifted, Expr::constant(ratio) * t.coeff});
    }
    return TimePowerSeries(s.alpha(), s.domain(), std::move(terms));
}

TimePowerSeries frac_integral_rational(const TimePowerSeries& s, const Rational& a) {
    if (!(Rational(0) < a)) throw DomainError("integral order must be positive");
    std::vector<SeriesTerm> terms;
    terms.reserve(s.terms().size());
    for (const auto& t : s.terms()) {
        const double mu = t.exponent.value(s.alpha());
        const double ratio = special::gamma_ratio(mu + 1.0, mu + a.value() + 1.0);
        AlphaExponent shifted{t.exponent.const_part + a, t.exponent.alpha_mult};
        terms.push_back({shifted, Expr::constant(ratio) * t.coeff});
    }
    return TimePowerSeries(s.alpha(), s.domain(), std::move(terms));
}

TimePowerSeries caputo_derivative(const TimePowerSeries& s, double alpha) {
    check_alpha(alpha);
    check_same_alpha(s.alpha(), alpha);
    std::vector<SeriesTerm> terms;
    for (const auto& t : s.terms()) {
        if (t.exponent.is_zero()) continue; // Caputo kills constants in t
        AlphaExponent lowered;
        if (t.exponent.alpha_mult >= 1) {
            lowered = {t.exponent.const_part, t.exponent.alpha_mult - 1};
        } else if (alpha == 1.0 && !(t.exponent.const_part < Rational(1))) {
            lowered = {t.exponent.const_part - Rational(1), 0};
        } else {
            throw DomainError("Caputo derivative of t^(" + t.exponent.str() +
                              ") leaves the exponent lattice for alpha = " +
                              std::to_string(alpha));
        }
        const double mu = t.exponent.value(alpha);
        const double ratio = special::gamma_ratio(mu + 1.0, mu - alpha + 1.0);
        terms.push_back({lowered, Expr::constant(ratio) * t.coeff});
    }
    return TimePowerSeries(s.alpha(), s.domain(), std::move(terms));
}

SumuduImage sumudu_forward(const TimePowerSeries& s) {
    SumuduImage img{s.alpha(), s.domain(), {}};
    img.terms.reserve(s.terms().size());
    for (const auto& t : s.terms()) {
        const double mu = t.exponent.value(s.alpha());
        img.terms.push_back({t.exponent, special::gamma(mu + 1.0), t.coeff});
    }
    return img;
}

SumuduImage sumudu_scale(const SumuduImage& img, double alpha) {
    check_alpha(alpha);
    check_same_alpha(img.alpha, alpha);
    SumuduImage out{img.alpha, img.domain, {}};
    out.terms.reserve(img.terms.size());
    for (const auto& t : img.terms)
        out.terms.push_back({{t.u_power.const_part, t.u_power.alpha_mult + 1}, t.scale, t.coeff});
    return out;
}

TimePowerSeries sumudu_inverse(const SumuduImage& img) {
    std::vector<SeriesTerm> terms;
    terms.reserve(img.terms.size());
    for (const auto& t : img.terms) {
        const double a = t.u_power.value(img.alpha);
        const double factor = t.scale / special::gamma(a + 1.0);
        terms.push_back({t.u_power, Expr::constant(factor) * t.coeff});
    }
    return TimePowerSeries(img.alpha, img.domain, std::move(terms));
}

double evaluate_series(const TimePowerSeries& s, double x, double t) {
    if (t < 0.0) throw DomainError("series evaluation requires t >= 0");
    double sum = 0.0;
    for (const auto& term : s.terms()) {
        if (t == 0.0) {
            if (term.exponent.is_zero()) sum += term.coeff.evaluate(x);
            continue;
        }
        sum += term.coeff.evaluate(x) * std::pow(t, term.exponent.value(s.alpha()));
    }
    return sum;
}

bool series_equal(const TimePowerSeries& a, const TimePowerSeries& b, double tol) {
    if (a.alpha() != b.alpha()) return false;
    if (a.terms().size() != b.terms().size()) return false;
    for (std::size_t i = 0; i < a.terms().size(); ++i) {
        const auto& ta = a.terms()[i];
        const auto& tb = b.terms()[i];
        if (ta.exponent != tb.exponent) return false;
        if (!numerically_equal(ta.coeff, tb.coeff, a.domain().lo, a.domain().hi, tol,
                               kCanonicalPoints))
            return false;
    }
    return true;
}

} // namespace fracsol
