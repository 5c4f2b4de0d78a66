#include "fracsol/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "fracsol/errors.hpp"

namespace fracsol::linalg {

std::vector<double> solve_tridiagonal(std::vector<double> sub, std::vector<double> diag,
                                      std::vector<double> sup, std::vector<double> rhs) {
    const std::size_t n = diag.size();
    if (sub.size() != n - 1 || sup.size() != n - 1 || rhs.size() != n)
        throw DomainError("tridiagonal system with inconsistent sizes");
    for (std::size_t i = 1; i < n; ++i) {
        if (diag[i - 1] == 0.0) throw DomainError("tridiagonal solve hit a zero pivot");
        const double w = sub[i - 1] / diag[i - 1];
        diag[i] -= w * sup[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    if (diag[n - 1] == 0.0) throw DomainError("tridiagonal solve hit a zero pivot");
    rhs[n - 1] /= diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) rhs[i] = (rhs[i] - sup[i] * rhs[i + 1]) / diag[i];
    return rhs;
}

QrFactors qr_factor_col_pivot(std::vector<double> a, int n, double rel_tol) {
    QrFactors f;
    f.n = n;
    f.qr = std::move(a);
    f.tau.assign(static_cast<std::size_t>(n), 0.0);
    f.jpvt.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) f.jpvt[static_cast<std::size_t>(j)] = j;
    auto at = [&](int i, int j) -> double& { return f.qr[static_cast<std::size_t>(i) * n + j]; };

    std::vector<double> colnorm(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += at(i, j) * at(i, j);
        colnorm[static_cast<std::size_t>(j)] = s;
    }

    for (int k = 0; k < n; ++k) {
        // pivot: move the largest remaining column to position k
        int p = k;
        for (int j = k + 1; j < n; ++j)
            if (colnorm[static_cast<std::size_t>(j)] > colnorm[static_cast<std::size_t>(p)]) p = j;
        if (p != k) {
            for (int i = 0; i < n; ++i) std::swap(at(i, k), at(i, p));
            std::swap(colnorm[static_cast<std::size_t>(k)], colnorm[static_cast<std::size_t>(p)]);
            std::swap(f.jpvt[static_cast<std::size_t>(k)], f.jpvt[static_cast<std::size_t>(p)]);
        }
        // Householder vector for column k
        double norm = 0.0;
        for (int i = k; i < n; ++i) norm += at(i, k) * at(i, k);
        norm = std::sqrt(norm);
        if (norm == 0.0 || !std::isfinite(norm)) {
            f.tau[static_cast<std::size_t>(k)] = 0.0;
            continue;
        }
        double alpha = at(k, k) >= 0.0 ? -norm : norm;
        const double v0 = at(k, k) - alpha;
        at(k, k) = alpha;
        f.tau[static_cast<std::size_t>(k)] = -v0 / alpha; // tau = 2 / (1 + sum(v_i^2/v0^2))
        // store scaled vector below the diagonal (v0 normalized to 1)
        for (int i = k + 1; i < n; ++i) at(i, k) /= v0;
        // apply to the trailing columns
        for (int j = k + 1; j < n; ++j) {
            double s = at(k, j);
            for (int i = k + 1; i < n; ++i) s += at(i, k) * at(i, j);
            s *= f.tau[static_cast<std::size_t>(k)];
            at(k, j) -= s;
            for (int i = k + 1; i < n; ++i) at(i, j) -= at(i, k) * s;
        }
        // downdate column norms
        for (int j = k + 1; j < n; ++j)
            colnorm[static_cast<std::size_t>(j)] =
                std::max(0.0, colnorm[static_cast<std::size_t>(j)] - at(k, j) * at(k, j));
    }

    f.r_max = std::abs(at(0, 0));
    if (f.r_max == 0.0) {
        f.zero_matrix = true;
        return f;
    }
    f.rank = 0;
    f.r_min = f.r_max;
    for (int k = 0; k < n; ++k) {
        const double d = std::abs(at(k, k));
        if (d < rel_tol * f.r_max || !std::isfinite(d)) break;
        f.r_min = d;
        ++f.rank;
    }
    return f;
}

std::vector<double> qr_solve(const QrFactors& f, std::vector<double> rhs) {
    const int n = f.n;
    if (f.zero_matrix || f.rank == 0) throw DomainError("solve with a rank-zero matrix");
    auto at = [&](int i, int j) { return f.qr[static_cast<std::size_t>(i) * n + j]; };
    // apply Q^T
    for (int k = 0; k < n; ++k) {
        const double tau = f.tau[static_cast<std::size_t>(k)];
        if (tau == 0.0) continue;
        double s = rhs[static_cast<std::size_t>(k)];
        for (int i = k + 1; i < n; ++i) s += at(i, k) * rhs[static_cast<std::size_t>(i)];
        s *= tau;
        rhs[static_cast<std::size_t>(k)] -= s;
        for (int i = k + 1; i < n; ++i) rhs[static_cast<std::size_t>(i)] -= at(i, k) * s;
    }
    // back substitution on the kept leading block
    std::vector<double> y(static_cast<std::size_t>(n), 0.0);
    for (int i = f.rank - 1; i >= 0; --i) {
        double s = rhs[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < f.rank; ++j) s -= at(i, j) * y[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = s / at(i, i);
    }
    std::vector<double> x(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(f.jpvt[static_cast<std::size_t>(j)])] = y[static_cast<std::size_t>(j)];
    return x;
}

double qr_condition_estimate(const QrFactors& f) {
    if (f.zero_matrix || f.rank == 0) return std::numeric_limits<double>::infinity();
    return f.r_max / f.r_min;
}

} // namespace fracsol::linalg
