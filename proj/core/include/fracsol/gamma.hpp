#ifndef FRACSOL_GAMMA_HPP
#define FRACSOL_GAMMA_HPP

namespace fracsol::special {

/// Gamma function for positive real arguments.
/// Lanczos approximation (g = 7, 9 coefficients; the coefficient set is
/// recorded in gamma.cpp). Relative accuracy better than 1e-12 on [0.1, 30].
/// Throws DomainError for x <= 0.
double gamma(double x);

/// Natural log of Gamma(x), x > 0, from the same Lanczos core.
double log_gamma(double x);

/// Gamma(a) / Gamma(b) for a, b > 0, computed as exp(log_gamma(a) - log_gamma(b))
/// so that large arguments never overflow on the way to a moderate ratio.
double gamma_ratio(double a, double b);

} // namespace fracsol::special

#endif
