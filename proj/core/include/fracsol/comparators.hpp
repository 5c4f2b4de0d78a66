#ifndef FRACSOL_COMPARATORS_HPP
#define FRACSOL_COMPARATORS_HPP

#include <string>
#include <vector>

#include "fracsol/problem.hpp"
#include "fracsol/solvers.hpp"

namespace fracsol {

/// Finite-difference solution on a uniform space-time grid.
struct GridSolution {
    std::vector<double> x;              // Nx nodes
    std::vector<double> t;              // Nt nodes
    std::vector<std::vector<double>> u; // u[i][j] at (x[i], t[j])
    double alpha = 1.0;
    std::string scheme;

    /// Bilinear interpolation inside the grid; throws DomainError outside.
    double value_at(double xq, double tq) const;
};

/// Kansa collocation solution: centers, shape parameter, and the coefficient
/// vector at every time level.
struct RBFSolution {
    std::vector<double> centers;
    double eps = 1.0;
    double alpha = 1.0;
    std::vector<double> t;
    std::vector<std::vector<double>> lambda; // lambda[k][j] at time level k
    double cond_estimate = 0.0;              // worst 1-norm condition estimate seen
    bool ill_conditioned_warning = false;    // estimate exceeded 1e14

    /// Kernel evaluation at x, linear interpolation between time levels.
    double value_at(double xq, double tq) const;
};

/// L1 discretization of the Caputo derivative (weights
/// b_j = (j+1)^(1-alpha) - j^(1-alpha)), central differences in space.
/// Monomials carrying a uxx factor are advanced with the uxx factor implicit
/// and the remaining factors frozen at the previous level; everything else in
/// the nonlinearity is lagged explicitly. Dirichlet boundary data comes from
/// the truncated HPSTM series (the exact solution where the series is exact).
GridSolution fdm_l1_solve(const FPDEProblem& problem, int Nx, int Nt, double T);

/// Kansa collocation in space with Gaussian kernels exp(-eps^2 r^2) and the
/// same L1 stepping and nonlinearity treatment as fdm_l1_solve. Each step
/// solves a dense N x N system by partially pivoted LU with a condition
/// estimate.
RBFSolution rbf_collocation_solve(const FPDEProblem& problem, int N, double eps, int Nt,
                                  double T);

/// L1 weight b_j for a given alpha.
double l1_weight(int j, double alpha);

/// Max over the sample cross product of |D^alpha[S] - RHS(S)| computed with
/// exact series arithmetic; the primary self-validation oracle.
double residual_norm(const FPDEProblem& problem, const SeriesSolution& sol,
                     const std::vector<double>& x_samples,
                     const std::vector<double>& t_samples);

/// The residual series itself, for slope studies.
TimePowerSeries residual_series(const FPDEProblem& problem, const SeriesSolution& sol);

/// Max distance from any point of [min(centers), max(centers)] to the nearest
/// center, measured on a fine probe grid.
double fill_distance(const std::vector<double>& centers);

} // namespace fracsol

#endif
