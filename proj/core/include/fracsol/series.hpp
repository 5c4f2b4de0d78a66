#ifndef FRACSOL_SERIES_HPP
#define FRACSOL_SERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "fracsol/expr.hpp"
#include "fracsol/rational.hpp"

namespace fracsol {

/// Exponent mu = const_part + alpha_mult * alpha, kept exact so that term
/// merging never depends on floating-point tolerance.
struct AlphaExponent {
    Rational const_part;  // nonnegative
    int alpha_mult = 0;   // nonnegative

    AlphaExponent() = default;
    AlphaExponent(Rational c, int m) : const_part(c), alpha_mult(m) {}

    double value(double alpha) const { return const_part.value() + alpha_mult * alpha; }
    bool is_zero() const { return const_part.is_zero() && alpha_mult == 0; }

    friend bool operator==(const AlphaExponent& a, const AlphaExponent& b) {
        return a.const_part == b.const_part && a.alpha_mult == b.alpha_mult;
    }
    friend bool operator!=(const AlphaExponent& a, const AlphaExponent& b) {
        return !(a == b);
    }

    std::string str() const;
};

struct SeriesTerm {
    AlphaExponent exponent;
    Expr coeff;
};

/// Spatial interval carried by a series; it fixes the 20 canonical sample
/// points used for zero-pruning and numerical coefficient comparison.
struct SpatialDomain {
    double lo = 0.0;
    double hi = 1.0;
};

constexpr double kPruneThreshold = 1e-12;
constexpr int kCanonicalPoints = 20;

/// Finite sum of terms coeff(x) * t^(const + k*alpha). Construction merges
/// duplicate exponent keys, simplifies coefficients, prunes terms that are
/// negligible on the canonical grid, and sorts by concrete exponent value.
class TimePowerSeries {
public:
    TimePowerSeries() : TimePowerSeries(1.0, {}, {}) {}
    TimePowerSeries(double alpha, SpatialDomain domain, std::vector<SeriesTerm> terms);

    static TimePowerSeries zero(double alpha, SpatialDomain domain = {});
    static TimePowerSeries single(double alpha, SpatialDomain domain, AlphaExponent mu,
                                  Expr coeff);

    double alpha() const { return alpha_; }
    const SpatialDomain& domain() const { return domain_; }
    const std::vector<SeriesTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Coefficient of an exact exponent key, if present.
    std::optional<Expr> coefficient(const AlphaExponent& mu) const;

private:
    double alpha_;
    SpatialDomain domain_;
    std::vector<SeriesTerm> terms_;
};

/// Sumudu-domain image of a power series: terms Gamma(mu+1)-scaled in the
/// u variable, using S[t^a] = Gamma(a+1) u^a.
struct SumuduTerm {
    AlphaExponent u_power;
    double scale = 1.0;
    Expr coeff;
};

struct SumuduImage {
    double alpha = 1.0;
    SpatialDomain domain;
    std::vector<SumuduTerm> terms;
};

// --- linear-space operations ------------------------------------------------

TimePowerSeries series_add(const TimePowerSeries& s1, const TimePowerSeries& s2);

/// Cauchy product; when max_order is set, result terms with
/// alpha_mult > max_order are dropped.
TimePowerSeries series_mul(const TimePowerSeries& s1, const TimePowerSeries& s2,
                           std::optional<int> max_order = std::nullopt);

/// Multiply every coefficient by g(x).
TimePowerSeries series_scale(const TimePowerSeries& s, const Expr& g);

/// Term-wise spatial derivative of the coefficients, order in {1, 2}.
TimePowerSeries series_diff_x(const TimePowerSeries& s, int order);

// --- fractional calculus ----------------------------------------------------

/// Riemann-Liouville J^alpha on the series' own alpha lattice:
/// (mu, c) -> (mu + alpha, c * Gamma(mu+1)/Gamma(mu+alpha+1)).
TimePowerSeries frac_integral(const TimePowerSeries& s, double alpha);

/// J^a for an exact rational order a (folds into the exponent's rational
/// part). Lets integrals of different orders compose on one series, as in the
/// semigroup law J^a J^b = J^(a+b).
TimePowerSeries frac_integral_rational(const TimePowerSeries& s, const Rational& a);

/// Caputo derivative: kills t-constant terms, lowers every other exponent by
/// alpha with the matching Gamma ratio.
TimePowerSeries caputo_derivative(const TimePowerSeries& s, double alpha);

// --- Sumudu pipeline ---------------------------------------------------------

SumuduImage sumudu_forward(const TimePowerSeries& s);
SumuduImage sumudu_scale(const SumuduImage& img, double alpha);
TimePowerSeries sumudu_inverse(const SumuduImage& img);

// --- evaluation ---------------------------------------------------------------

/// Value at (x, t), t >= 0. At t = 0 only exponent-zero terms contribute.
double evaluate_series(const TimePowerSeries& s, double x, double t);

/// Term-wise numerical equality on the canonical sample grid.
bool series_equal(const TimePowerSeries& a, const TimePowerSeries& b, double tol = 1e-10);

} // namespace fracsol

#endif
