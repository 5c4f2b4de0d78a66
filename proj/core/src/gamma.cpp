#include "fracsol/gamma.hpp"

#include <cmath>
#include <string>

#include "fracsol/errors.hpp"

namespace fracsol::special {

namespace {

// Lanczos approximation, g = 7, n = 9 (Godfrey's coefficient set).
constexpr double kG = 7.0;
constexpr double kCoeff[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};
constexpr double kSqrtTwoPi = 2.5066282746310002;

double lanczos_sum(double x) {
    // x >= 0.5; series in 1/(x - 1 + k)
    double a = kCoeff[0];
    for (int k = 1; k < 9; ++k) a += kCoeff[k] / (x - 1.0 + k);
    return a;
}

void require_positive(double x, const char* who) {
    if (!(x > 0.0)) {
        throw DomainError(std::string(who) + " requires a positive argument, got " +
                          std::to_string(x));
    }
}

double gamma_core(double x) {
    // valid for x >= 0.5
    const double t = x + kG - 0.5;
    return kSqrtTwoPi * std::pow(t, x - 0.5) * std::exp(-t) * lanczos_sum(x);
}

} // namespace

double gamma(double x) {
    require_positive(x, "gamma");
    if (x < 0.5) return gamma_core(x + 1.0) / x; // Gamma(x) = Gamma(x+1)/x
    return gamma_core(x);
}

double log_gamma(double x) {
    require_positive(x, "log_gamma");
    if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
    const double t = x + kG - 0.5;
    return 0.5 * std::log(2.0 * M_PI) + (x - 0.5) * std::log(t) - t +
           std::log(lanczos_sum(x));
}

double gamma_ratio(double a, double b) {
    require_positive(a, "gamma_ratio");
    require_positive(b, "gamma_ratio");
    if (a == b) return 1.0;
    return std::exp(log_gamma(a) - log_gamma(b));
}

} // namespace fracsol::special
