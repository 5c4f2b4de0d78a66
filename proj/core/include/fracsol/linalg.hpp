#ifndef FRACSOL_LINALG_HPP
#define FRACSOL_LINALG_HPP

#include <vector>

namespace fracsol::linalg {

/// Thomas algorithm for a tridiagonal system. sub/sup have n-1 entries.
std::vector<double> solve_tridiagonal(std::vector<double> sub, std::vector<double> diag,
                                      std::vector<double> sup, std::vector<double> rhs);

/// Householder QR with column pivoting (row-major storage). Rank-revealing
/// enough to solve the nearly rank-deficient collocation systems that flat
/// Gaussian kernels produce.
struct QrFactors {
    int n = 0;
    std::vector<double> qr;    // R in the upper triangle, Householder vectors below
    std::vector<double> tau;   // Householder scalars
    std::vector<int> jpvt;     // column permutation
    double r_max = 0.0;        // |R_00|
    double r_min = 0.0;        // smallest kept |R_kk|
    int rank = 0;              // numerical rank at the relative cutoff
    bool zero_matrix = false;
};

/// rel_tol is the relative diagonal cutoff defining the numerical rank.
QrFactors qr_factor_col_pivot(std::vector<double> a, int n, double rel_tol = 1e-14);

/// Basic (truncated) solution: components beyond the numerical rank are zero
/// in the pivoted ordering.
std::vector<double> qr_solve(const QrFactors& f, std::vector<double> rhs);

/// |R_00| / |R_rr| over the kept block: a cheap condition proxy for the
/// factored matrix (infinite when the matrix was truncated to zero rank).
double qr_condition_estimate(const QrFactors& f);

} // namespace fracsol::linalg

#endif
