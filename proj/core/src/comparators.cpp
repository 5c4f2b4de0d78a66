#include "fracsol/comparators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "fracsol/errors.hpp"
#include "fracsol/gamma.hpp"
#include "fracsol/linalg.hpp"

namespace fracsol {

namespace {

constexpr double kDivergenceBound = 1e8;
constexpr double kCondWarnThreshold = 1e14;
constexpr double kSolveResidualGate = 1e-8;

double powi(double b, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

int spatial_sign(const FPDEProblem& p) { return p.form == EquationForm::Rhs ? 1 : -1; }

double source_value(const FPDEProblem& p, double x, double t) {
    double s = 0.0;
    for (const auto& st : p.source) s += st.coeff.evaluate(x) * powi(t, st.t_power);
    return s;
}

// Spatial-operator pieces evaluated on a set of nodes with the previous
// level's values frozen in.
struct SplitOperator {
    std::vector<double> lin0, lin1, lin2; // implicit linear coefficients
    std::vector<double> frozen_diffusion; // implicit coefficient from uxx monomials
    std::vector<double> explicit_part;    // lagged nonlinear monomials without uxx
    double max_reaction = 0.0;            // |d explicit / du|
    double max_advection = 0.0;           // |d explicit / dux|
};

SplitOperator split_operator(const FPDEProblem& p, const std::vector<double>& nodes,
                             const std::vector<double>& u, const std::vector<double>& ux,
                             const std::vector<double>& uxx) {
    const std::size_t n = nodes.size();
    const double sign = spatial_sign(p);
    SplitOperator op;
    op.lin0.assign(n, 0.0);
    op.lin1.assign(n, 0.0);
    op.lin2.assign(n, 0.0);
    op.frozen_diffusion.assign(n, 0.0);
    op.explicit_part.assign(n, 0.0);

    for (const auto& lt : p.linear_op) {
        std::vector<double>& dst = lt.order == 0 ? op.lin0 : lt.order == 1 ? op.lin1 : op.lin2;
        for (std::size_t i = 0; i < n; ++i) dst[i] += sign * lt.coeff.evaluate(nodes[i]);
    }
    for (const auto& mono : p.nonlinear_op) {
        for (std::size_t i = 0; i < n; ++i) {
            const double g = sign * mono.coeff.evaluate(nodes[i]);
            if (mono.uxx_pow >= 1) {
                op.frozen_diffusion[i] += g * powi(u[i], mono.u_pow) *
                                          powi(ux[i], mono.ux_pow) *
                                          powi(uxx[i], mono.uxx_pow - 1);
            } else {
                const double base = g * powi(u[i], mono.u_pow) * powi(ux[i], mono.ux_pow);
                op.explicit_part[i] += base;
                if (mono.u_pow >= 1)
                    op.max_reaction =
                        std::max(op.max_reaction, std::abs(g * mono.u_pow *
                                                           powi(u[i], mono.u_pow - 1) *
                                                           powi(ux[i], mono.ux_pow)));
                if (mono.ux_pow >= 1)
                    op.max_advection =
                        std::max(op.max_advection, std::abs(g * mono.ux_pow *
                                                            powi(u[i], mono.u_pow) *
                                                            powi(ux[i], mono.ux_pow - 1)));
            }
        }
    }
    return op;
}

// Guards for the lagged terms. The diffusion part is always implicit, which
// damps high modes, so the lagged first- and zeroth-order contributions get
// the usual factor-2 amplification bound rather than a strict CFL of 1.
void check_explicit_stability(const SplitOperator& op, double sigma, double dx) {
    if (op.max_reaction * sigma > 2.0)
        throw StabilityError("explicit reaction step restriction violated: |dN/du| * sigma = " +
                             std::to_string(op.max_reaction * sigma) + " > 2");
    if (op.max_advection * sigma / dx > 2.0)
        throw StabilityError("explicit advection step restriction violated: CFL = " +
                             std::to_string(op.max_advection * sigma / dx) + " > 2");
}

std::function<double(double, double)> boundary_from_hpstm(const FPDEProblem& p) {
    SeriesSolution sol = hpstm_solve(p, 5);
    auto sum = std::make_shared<TimePowerSeries>(sol.partial_sum);
    return [sum](double x, double t) { return evaluate_series(*sum, x, t); };
}

} // namespace

double l1_weight(int j, double alpha) {
    if (j < 0) throw DomainError("L1 weight index must be nonnegative");
    const double e = 1.0 - alpha;
    const double lead = std::pow(static_cast<double>(j + 1), e);
    return j == 0 ? lead : lead - std::pow(static_cast<double>(j), e);
}

double GridSolution::value_at(double xq, double tq) const {
    if (xq < x.front() || xq > x.back() || tq < t.front() || tq > t.back())
        throw DomainError("query point outside the grid");
    const double dx = x[1] - x[0];
    const double dt = t[1] - t[0];
    std::size_t i = std::min(static_cast<std::size_t>((xq - x.front()) / dx), x.size() - 2);
    std::size_t j = std::min(static_cast<std::size_t>((tq - t.front()) / dt), t.size() - 2);
    const double ax = (xq - x[i]) / dx;
    const double at = (tq - t[j]) / dt;
    return (1 - ax) * (1 - at) * u[i][j] + ax * (1 - at) * u[i + 1][j] +
           (1 - ax) * at * u[i][j + 1] + ax * at * u[i + 1][j + 1];
}

GridSolution fdm_l1_solve(const FPDEProblem& problem, int Nx, int Nt, double T) {
    problem.validate();
    if (Nx < 8 || Nt < 8) throw DomainError("fdm_l1_solve requires Nx, Nt >= 8");
    if (!(T > 0.0)) throw DomainError("fdm_l1_solve requires T > 0");

    GridSolution g;
    g.alpha = problem.alpha;
    g.scheme = "L1 Caputo / central differences / frozen-coefficient IMEX";
    const double dx = (problem.domain.hi - problem.domain.lo) / (Nx - 1);
    const double dt = T / (Nt - 1);
    for (int i = 0; i < Nx; ++i) g.x.push_back(problem.domain.lo + i * dx);
    for (int k = 0; k < Nt; ++k) g.t.push_back(k * dt);
    g.u.assign(static_cast<std::size_t>(Nx), std::vector<double>(static_cast<std::size_t>(Nt), 0.0));

    for (int i = 0; i < Nx; ++i) g.u[static_cast<std::size_t>(i)][0] = problem.ic.evaluate(g.x[static_cast<std::size_t>(i)]);

    const double sigma = special::gamma(2.0 - problem.alpha) * std::pow(dt, problem.alpha);
    std::vector<double> b(static_cast<std::size_t>(Nt), 0.0);
    for (int j = 0; j < Nt; ++j) b[static_cast<std::size_t>(j)] = l1_weight(j, problem.alpha);

    auto boundary = boundary_from_hpstm(problem);

    std::vector<double> up(static_cast<std::size_t>(Nx)), uxp(static_cast<std::size_t>(Nx)),
        uxxp(static_cast<std::size_t>(Nx));

    for (int k = 1; k < Nt; ++k) {
        for (int i = 0; i < Nx; ++i) up[static_cast<std::size_t>(i)] = g.u[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1)];
        for (int i = 1; i < Nx - 1; ++i) {
            uxp[static_cast<std::size_t>(i)] = (up[static_cast<std::size_t>(i + 1)] - up[static_cast<std::size_t>(i - 1)]) / (2 * dx);
            uxxp[static_cast<std::size_t>(i)] =
                (up[static_cast<std::size_t>(i + 1)] - 2 * up[static_cast<std::size_t>(i)] + up[static_cast<std::size_t>(i - 1)]) / (dx * dx);
        }
        uxp[0] = (up[1] - up[0]) / dx;
        uxp[static_cast<std::size_t>(Nx - 1)] = (up[static_cast<std::size_t>(Nx - 1)] - up[static_cast<std::size_t>(Nx - 2)]) / dx;
        uxxp[0] = uxxp[1];
        uxxp[static_cast<std::size_t>(Nx - 1)] = uxxp[static_cast<std::size_t>(Nx - 2)];

        const SplitOperator op = split_operator(problem, g.x, up, uxp, uxxp);
        check_explicit_stability(op, sigma, dx);

        std::vector<double> sub(static_cast<std::size_t>(Nx - 1), 0.0),
            diag(static_cast<std::size_t>(Nx), 0.0), sup(static_cast<std::size_t>(Nx - 1), 0.0),
            rhs(static_cast<std::size_t>(Nx), 0.0);

        const double tk = g.t[static_cast<std::size_t>(k)];
        for (int i = 1; i < Nx - 1; ++i) {
            const std::size_t si = static_cast<std::size_t>(i);
            const double c2 = op.lin2[si] + op.frozen_diffusion[si];
            const double c1 = op.lin1[si];
            const double c0 = op.lin0[si];
            diag[si] = 1.0 - sigma * (c0 - 2.0 * c2 / (dx * dx));
            sub[si - 1] = -sigma * (c2 / (dx * dx) - c1 / (2.0 * dx));
            sup[si] = -sigma * (c2 / (dx * dx) + c1 / (2.0 * dx));

            double hist = up[si];
            for (int j = 1; j < k; ++j)
                hist -= b[static_cast<std::size_t>(j)] *
                        (g.u[si][static_cast<std::size_t>(k - j)] -
                         g.u[si][static_cast<std::size_t>(k - j - 1)]);
            rhs[si] = hist + sigma * (op.explicit_part[si] +
                                      source_value(problem, g.x[si], tk));
        }
        diag[0] = 1.0;
        sup[0] = 0.0;
        rhs[0] = boundary(g.x[0], tk);
        diag[static_cast<std::size_t>(Nx - 1)] = 1.0;
        sub[static_cast<std::size_t>(Nx - 2)] = 0.0;
        rhs[static_cast<std::size_t>(Nx - 1)] = boundary(g.x[static_cast<std::size_t>(Nx - 1)], tk);

        std::vector<double> next = linalg::solve_tridiagonal(sub, diag, sup, rhs);
        for (int i = 0; i < Nx; ++i) {
            const double v = next[static_cast<std::size_t>(i)];
            if (!std::isfinite(v) || std::abs(v) > kDivergenceBound)
                throw DivergenceError("fdm_l1_solve diverged at t = " + std::to_string(tk));
            g.u[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = v;
        }
    }
    return g;
}

double RBFSolution::value_at(double xq, double tq) const {
    if (tq < t.front() || tq > t.back()) throw DomainError("query time outside the solve window");
    auto eval_level = [&](std::size_t k) {
        double s = 0.0;
        for (std::size_t j = 0; j < centers.size(); ++j) {
            const double r = xq - centers[j];
            s += lambda[k][j] * std::exp(-eps * eps * r * r);
        }
        return s;
    };
    const double dt = t[1] - t[0];
    std::size_t k = std::min(static_cast<std::size_t>((tq - t.front()) / dt), t.size() - 2);
    const double at = (tq - t[k]) / dt;
    return (1 - at) * eval_level(k) + at * eval_level(k + 1);
}

RBFSolution rbf_collocation_solve(const FPDEProblem& problem, int N, double eps, int Nt,
                                  double T) {
    problem.validate();
    if (N < 5) throw DomainError("rbf_collocation_solve requires N >= 5 centers");
    if (Nt < 2) throw DomainError("rbf_collocation_solve requires Nt >= 2");
    if (!(T > 0.0)) throw DomainError("rbf_collocation_solve requires T > 0");
    if (!(eps > 0.0)) throw DomainError("shape parameter must be positive");

    RBFSolution r;
    r.eps = eps;
    r.alpha = problem.alpha;
    const double h = (problem.domain.hi - problem.domain.lo) / (N - 1);
    for (int j = 0; j < N; ++j) r.centers.push_back(problem.domain.lo + j * h);
    const double dt = T / (Nt - 1);
    for (int k = 0; k < Nt; ++k) r.t.push_back(k * dt);

    const auto phi = [&](double xi, double xj) {
        const double d = xi - xj;
        return std::exp(-eps * eps * d * d);
    };
    const auto phi_x = [&](double xi, double xj) {
        const double d = xi - xj;
        return -2.0 * eps * eps * d * std::exp(-eps * eps * d * d);
    };
    const auto phi_xx = [&](double xi, double xj) {
        const double d = xi - xj;
        return (-2.0 * eps * eps + 4.0 * eps * eps * eps * eps * d * d) *
               std::exp(-eps * eps * d * d);
    };

    const std::size_t n = static_cast<std::size_t>(N);
    auto solve_checked = [&](const std::vector<double>& a, std::vector<double> rhs,
                             const char* stage) {
        linalg::QrFactors f = linalg::qr_factor_col_pivot(a, N);
        if (f.zero_matrix || f.rank == 0)
            throw IllConditionedError(std::string("collocation matrix has rank zero (") + stage +
                                          "); try a larger shape parameter",
                                      std::numeric_limits<double>::infinity());
        const double cond = linalg::qr_condition_estimate(f);
        r.cond_estimate = std::max(r.cond_estimate, cond);
        if (cond > kCondWarnThreshold) r.ill_conditioned_warning = true;
        std::vector<double> sol = linalg::qr_solve(f, rhs);
        // quality gate: flat kernels may truncate the rank, but the right-hand
        // sides of a solvable collocation step stay inside the kept subspace;
        // a large solve residual means the step is genuinely unusable
        double rmax = 0.0, xmax = 0.0, bmax = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double ax = 0.0;
            for (std::size_t j = 0; j < n; ++j) ax += a[i * n + j] * sol[j];
            rmax = std::max(rmax, std::abs(ax - rhs[i]));
            xmax = std::max(xmax, std::abs(sol[i]));
            bmax = std::max(bmax, std::abs(rhs[i]));
        }
        double anorm_inf = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < n; ++j) row += std::abs(a[i * n + j]);
            anorm_inf = std::max(anorm_inf, row);
        }
        const double denom = anorm_inf * xmax + bmax;
        if (!std::isfinite(rmax) || !std::isfinite(xmax) ||
            (denom > 0.0 && rmax / denom > kSolveResidualGate))
            throw IllConditionedError(
                std::string("collocation solve lost accuracy (") + stage +
                    ", cond estimate " + std::to_string(cond) +
                    "); try a different shape parameter",
                cond);
        return sol;
    };

    // interpolation of the initial condition
    std::vector<double> a0(n * n);
    std::vector<double> ic(n);
    for (std::size_t i = 0; i < n; ++i) {
        ic[i] = problem.ic.evaluate(r.centers[i]);
        for (std::size_t j = 0; j < n; ++j) a0[i * n + j] = phi(r.centers[i], r.centers[j]);
    }
    r.lambda.push_back(solve_checked(a0, ic, "initial interpolation"));

    const double sigma = special::gamma(2.0 - problem.alpha) * std::pow(dt, problem.alpha);
    std::vector<double> b(static_cast<std::size_t>(Nt), 0.0);
    for (int j = 0; j < Nt; ++j) b[static_cast<std::size_t>(j)] = l1_weight(j, problem.alpha);

    auto boundary = boundary_from_hpstm(problem);

    // value history at the centers
    std::vector<std::vector<double>> vals;
    vals.push_back(ic);

    std::vector<double> up(n), uxp(n), uxxp(n);
    for (int k = 1; k < Nt; ++k) {
        // frozen coefficients from finite differences on the center values;
        // analytic kernel derivatives of an ill-conditioned interpolant
        // amplify coefficient noise, the values do not
        up = vals.back();
        for (std::size_t i = 1; i + 1 < n; ++i) {
            uxp[i] = (up[i + 1] - up[i - 1]) / (2 * h);
            uxxp[i] = (up[i + 1] - 2 * up[i] + up[i - 1]) / (h * h);
        }
        uxp[0] = (up[1] - up[0]) / h;
        uxp[n - 1] = (up[n - 1] - up[n - 2]) / h;
        uxxp[0] = uxxp[1];
        uxxp[n - 1] = uxxp[n - 2];
        const SplitOperator op = split_operator(problem, r.centers, up, uxp, uxxp);
        check_explicit_stability(op, sigma, h);

        const double tk = r.t[static_cast<std::size_t>(k)];
        std::vector<double> a(n * n), rhs(n);
        for (std::size_t i = 0; i < n; ++i) {
            const bool boundary_row = (i == 0 || i + 1 == n);
            if (boundary_row) {
                for (std::size_t j = 0; j < n; ++j) a[i * n + j] = phi(r.centers[i], r.centers[j]);
                rhs[i] = boundary(r.centers[i], tk);
                continue;
            }
            const double c2 = op.lin2[i] + op.frozen_diffusion[i];
            for (std::size_t j = 0; j < n; ++j) {
                a[i * n + j] = phi(r.centers[i], r.centers[j]) -
                               sigma * (op.lin0[i] * phi(r.centers[i], r.centers[j]) +
                                        op.lin1[i] * phi_x(r.centers[i], r.centers[j]) +
                                        c2 * phi_xx(r.centers[i], r.centers[j]));
            }
            double hist = vals[static_cast<std::size_t>(k - 1)][i];
            for (int j = 1; j < k; ++j)
                hist -= b[static_cast<std::size_t>(j)] *
                        (vals[static_cast<std::size_t>(k - j)][i] -
                         vals[static_cast<std::size_t>(k - j - 1)][i]);
            rhs[i] = hist + sigma * (op.explicit_part[i] +
                                     source_value(problem, r.centers[i], tk));
        }
        std::vector<double> lam_next = solve_checked(a, rhs, "time step");
        r.lambda.push_back(lam_next);

        std::vector<double> vnext(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double v = 0.0;
            for (std::size_t j = 0; j < n; ++j) v += lam_next[j] * phi(r.centers[i], r.centers[j]);
            if (!std::isfinite(v) || std::abs(v) > kDivergenceBound)
                throw DivergenceError("rbf_collocation_solve diverged at t = " +
                                      std::to_string(tk));
            vnext[i] = v;
        }
        vals.push_back(std::move(vnext));
    }
    return r;
}

TimePowerSeries residual_series(const FPDEProblem& problem, const SeriesSolution& sol) {
    if (problem.alpha != sol.alpha)
        throw AlphaMismatch("residual_series: solution alpha differs from problem alpha");
    const TimePowerSeries& s = sol.partial_sum;
    TimePowerSeries rhs = series_add(apply_linear(problem, s), apply_nonlinear(problem, s));
    if (problem.form == EquationForm::Lhs)
        rhs = series_scale(rhs, Expr::constant(-1.0));
    const TimePowerSeries f = source_series(problem);
    if (!f.empty()) rhs = series_add(rhs, f);
    return series_add(caputo_derivative(s, problem.alpha),
                      series_scale(rhs, Expr::constant(-1.0)));
}

double residual_norm(const FPDEProblem& problem, const SeriesSolution& sol,
                     const std::vector<double>& x_samples,
                     const std::vector<double>& t_samples) {
    const TimePowerSeries r = residual_series(problem, sol);
    double worst = 0.0;
    for (double t : t_samples) {
        if (!(t > 0.0)) throw DomainError("residual_norm requires t > 0 samples");
        for (double x : x_samples)
            worst = std::max(worst, std::abs(evaluate_series(r, x, t)));
    }
    return worst;
}

double fill_distance(const std::vector<double>& centers) {
    if (centers.size() < 2) throw DomainError("fill_distance needs at least 2 centers");
    std::vector<double> sorted = centers;
    std::sort(sorted.begin(), sorted.end());
    const double lo = sorted.front(), hi = sorted.back();
    constexpr int kProbes = 2001;
    double worst = 0.0;
    for (int i = 0; i < kProbes; ++i) {
        const double p = lo + (hi - lo) * i / (kProbes - 1);
        double nearest = std::abs(p - sorted[0]);
        for (double c : sorted) nearest = std::min(nearest, std::abs(p - c));
        worst = std::max(worst, nearest);
    }
    return worst;
}

} // namespace fracsol
