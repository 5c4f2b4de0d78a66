#ifndef FRACSOL_SOLVERS_HPP
#define FRACSOL_SOLVERS_HPP

#include <string>
#include <vector>

#include "fracsol/problem.hpp"
#include "fracsol/series.hpp"

namespace fracsol {

/// Probe time for the solver's built-in term-ratio diagnostic.
constexpr double kDiagnosticProbe = 0.1;

/// Series solution u_0..u_n of one (problem, alpha, n) solve.
struct SeriesSolution {
    std::string problem_name;
    double alpha = 1.0;
    int n_terms = 0;                     // highest term index; terms.size() == n_terms + 1
    std::vector<TimePowerSeries> terms;  // u_0 .. u_n
    TimePowerSeries partial_sum;         // exponent-merged sum of all terms

    // term-ratio diagnostic at kDiagnosticProbe over the canonical x grid;
    // the warning is set when some ratio exceeds 1 (solution still returned)
    std::vector<double> diagnostic_ratios;
    bool non_convergence_warning = false;
};

/// Truncated polynomial in the homotopy parameter with series coefficients;
/// arithmetic drops degrees above the cap.
class HomotopyPolynomial {
public:
    HomotopyPolynomial(int max_degree, TimePowerSeries zero);

    int max_degree() const { return max_degree_; }
    const TimePowerSeries& coeff(int degree) const { return coeffs_.at(static_cast<std::size_t>(degree)); }
    void set_coeff(int degree, TimePowerSeries s);

    friend HomotopyPolynomial operator+(const HomotopyPolynomial& p, const HomotopyPolynomial& q);
    friend HomotopyPolynomial operator*(const HomotopyPolynomial& p, const HomotopyPolynomial& q);

private:
    int max_degree_;
    std::vector<TimePowerSeries> coeffs_;
};

/// He's polynomial H_n: the coefficient of p^n in N(sum p^k u_k), computed by
/// truncated polynomial arithmetic in the homotopy parameter. Exact for the
/// polynomial nonlinearities this library admits.
TimePowerSeries he_polynomial(const FPDEProblem& problem,
                              const std::vector<TimePowerSeries>& terms, int n);

/// Adomian polynomial A_n: same defining formula with parameter lambda, here
/// evaluated by direct multinomial coefficient extraction. Kept independent
/// of he_polynomial so the two can cross-check each other.
TimePowerSeries adomian_polynomial(const FPDEProblem& problem,
                                   const std::vector<TimePowerSeries>& terms, int n);

/// HPSTM recursion: u_0 = ic + J^alpha f, then each step runs the
/// forward-scale-invert Sumudu pipeline on R[u_{k-1}] + H_{k-1}.
SeriesSolution hpstm_solve(const FPDEProblem& problem, int n);

/// ADM recursion: the same fixed point through the Riemann-Liouville
/// integral and Adomian polynomials.
SeriesSolution adm_solve(const FPDEProblem& problem, int n);

/// Sup-norm ratios ||u_{k+1}|| / ||u_k|| over x_samples at t_probe for
/// consecutive nonzero terms; empirical estimate of the contraction constant.
std::vector<double> convergence_ratios(const SeriesSolution& sol, double t_probe,
                                       const std::vector<double>& x_samples);

// building blocks shared with the comparator module

/// R[s]: the problem's linear operator applied term-wise.
TimePowerSeries apply_linear(const FPDEProblem& problem, const TimePowerSeries& s);

/// N(s): the polynomial nonlinearity evaluated with exact series arithmetic.
TimePowerSeries apply_nonlinear(const FPDEProblem& problem, const TimePowerSeries& s);

/// The source term f as a series on the problem's lattice (empty when f = 0).
TimePowerSeries source_series(const FPDEProblem& problem);

} // namespace fracsol

#endif
