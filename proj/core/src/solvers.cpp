#include "fracsol/solvers.hpp"

#include <algorithm>
#include <cmath>

#include "fracsol/errors.hpp"

namespace fracsol {

namespace {

void check_nonlinearity(const FPDEProblem& problem) {
    for (const auto& m : problem.nonlinear_op)
        if (m.u_pow < 0 || m.ux_pow < 0 || m.uxx_pow < 0)
            throw UnsupportedNonlinearity(
                "nonlinear operator must be polynomial in {u, ux, uxx}");
}

TimePowerSeries unit_series(double alpha, const SpatialDomain& domain) {
    return TimePowerSeries::single(alpha, domain, {Rational(0), 0}, Expr::constant(1.0));
}

TimePowerSeries series_pow(const TimePowerSeries& s, int p, double alpha,
                           const SpatialDomain& domain) {
    TimePowerSeries acc = unit_series(alpha, domain);
    for (int i = 0; i < p; ++i) acc = series_mul(acc, s);
    return acc;
}

} // namespace

// ---------------------------------------------------------------------------
// HomotopyPolynomial

HomotopyPolynomial::HomotopyPolynomial(int max_degree, TimePowerSeries zero)
    : max_degree_(max_degree) {
    coeffs_.assign(static_cast<std::size_t>(max_degree) + 1, zero);
}

void HomotopyPolynomial::set_coeff(int degree, TimePowerSeries s) {
    coeffs_.at(static_cast<std::size_t>(degree)) = std::move(s);
}

HomotopyPolynomial operator+(const HomotopyPolynomial& p, const HomotopyPolynomial& q) {
    HomotopyPolynomial r = p;
    for (int d = 0; d <= r.max_degree_ && d <= q.max_degree_; ++d)
        r.coeffs_[static_cast<std::size_t>(d)] = series_add(p.coeff(d), q.coeff(d));
    return r;
}

HomotopyPolynomial operator*(const HomotopyPolynomial& p, const HomotopyPolynomial& q) {
    const TimePowerSeries zero =
        TimePowerSeries::zero(p.coeff(0).alpha(), p.coeff(0).domain());
    HomotopyPolynomial r(p.max_degree_, zero);
    for (int i = 0; i <= p.max_degree_; ++i) {
        if (p.coeff(i).empty()) continue;
        for (int j = 0; i + j <= r.max_degree_ && j <= q.max_degree_; ++j) {
            if (q.coeff(j).empty()) continue;
            r.coeffs_[static_cast<std::size_t>(i + j)] =
                series_add(r.coeff(i + j), series_mul(p.coeff(i), q.coeff(j)));
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// polynomial extraction

TimePowerSeries he_polynomial(const FPDEProblem& problem,
                              const std::vector<TimePowerSeries>& terms, int n) {
    check_nonlinearity(problem);
    if (static_cast<int>(terms.size()) < n + 1)
        throw DomainError("he_polynomial needs terms u_0..u_n");
    const double alpha = terms[0].alpha();
    const SpatialDomain domain = terms[0].domain();
    const TimePowerSeries zero = TimePowerSeries::zero(alpha, domain);

    // U(p) = sum p^k u_k and its spatial derivatives, truncated at degree n
    HomotopyPolynomial u_poly(n, zero), ux_poly(n, zero), uxx_poly(n, zero);
    for (int k = 0; k <= n; ++k) {
        u_poly.set_coeff(k, terms[static_cast<std::size_t>(k)]);
        ux_poly.set_coeff(k, series_diff_x(terms[static_cast<std::size_t>(k)], 1));
        uxx_poly.set_coeff(k, series_diff_x(terms[static_cast<std::size_t>(k)], 2));
    }

    TimePowerSeries result = zero;
    for (const auto& mono : problem.nonlinear_op) {
        HomotopyPolynomial acc(n, zero);
        acc.set_coeff(0, TimePowerSeries::single(alpha, domain, {Rational(0), 0},
                                                 mono.coeff.simplify_basic()));
        for (int i = 0; i < mono.u_pow; ++i) acc = acc * u_poly;
        for (int i = 0; i < mono.ux_pow; ++i) acc = acc * ux_poly;
        for (int i = 0; i < mono.uxx_pow; ++i) acc = acc * uxx_poly;
        result = series_add(result, acc.coeff(n));
    }
    return result;
}

namespace {

// coefficient of lambda^m in (sum_k lambda^k v_k)^p by multinomial expansion
TimePowerSeries lambda_power_coefficient(const std::vector<TimePowerSeries>& v, int p, int m,
                                         double alpha, const SpatialDomain& domain) {
    if (p == 0) {
        return m == 0 ? unit_series(alpha, domain) : TimePowerSeries::zero(alpha, domain);
    }
    TimePowerSeries acc = TimePowerSeries::zero(alpha, domain);
    std::vector<int> idx;
    // enumerate nondecreasing index multisets idx[0..p-1] with sum m
    auto emit = [&]() {
        double multiplicity = 1.0; // p! / prod(count_i!)
        for (int i = 2; i <= p; ++i) multiplicity *= i;
        int run = 1;
        for (std::size_t i = 1; i < idx.size(); ++i) {
            if (idx[i] == idx[i - 1]) {
                ++run;
                multiplicity /= run;
            } else {
                run = 1;
            }
        }
        TimePowerSeries prod = v[static_cast<std::size_t>(idx[0])];
        for (std::size_t i = 1; i < idx.size(); ++i)
            prod = series_mul(prod, v[static_cast<std::size_t>(idx[i])]);
        acc = series_add(acc, series_scale(prod, Expr::constant(multiplicity)));
    };
    auto rec = [&](auto&& self, int slot, int min_index, int remaining) -> void {
        if (slot == p) {
            if (remaining == 0) emit();
            return;
        }
        const int slots_left = p - slot;
        for (int i = min_index; i * slots_left <= remaining; ++i) {
            idx.push_back(i);
            self(self, slot + 1, i, remaining - i);
            idx.pop_back();
        }
    };
    rec(rec, 0, 0, m);
    return acc;
}

} // namespace

TimePowerSeries adomian_polynomial(const FPDEProblem& problem,
                                   const std::vector<TimePowerSeries>& terms, int n) {
    check_nonlinearity(problem);
    if (static_cast<int>(terms.size()) < n + 1)
        throw DomainError("adomian_polynomial needs terms u_0..u_n");
    const double alpha = terms[0].alpha();
    const SpatialDomain domain = terms[0].domain();

    std::vector<TimePowerSeries> u(terms.begin(), terms.begin() + n + 1);
    std::vector<TimePowerSeries> ux, uxx;
    for (const auto& s : u) {
        ux.push_back(series_diff_x(s, 1));
        uxx.push_back(series_diff_x(s, 2));
    }

    TimePowerSeries result = TimePowerSeries::zero(alpha, domain);
    for (const auto& mono : problem.nonlinear_op) {
        for (int m1 = 0; m1 <= n; ++m1) {
            for (int m2 = 0; m1 + m2 <= n; ++m2) {
                const int m3 = n - m1 - m2;
                if (mono.u_pow == 0 && m1 != 0) continue;
                if (mono.ux_pow == 0 && m2 != 0) continue;
                if (mono.uxx_pow == 0 && m3 != 0) continue;
                TimePowerSeries part =
                    lambda_power_coefficient(u, mono.u_pow, m1, alpha, domain);
                if (part.empty()) continue;
                part = series_mul(part, lambda_power_coefficient(ux, mono.ux_pow, m2, alpha,
                                                                 domain));
                if (part.empty()) continue;
                part = series_mul(part, lambda_power_coefficient(uxx, mono.uxx_pow, m3, alpha,
                                                                 domain));
                if (part.empty()) continue;
                result = series_add(result, series_scale(part, mono.coeff.simplify_basic()));
            }
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// operators

TimePowerSeries apply_linear(const FPDEProblem& problem, const TimePowerSeries& s) {
    TimePowerSeries acc = TimePowerSeries::zero(s.alpha(), s.domain());
    for (const auto& lt : problem.linear_op)
        acc = series_add(acc, series_scale(series_diff_x(s, lt.order),
                                           lt.coeff.simplify_basic()));
    return acc;
}

TimePowerSeries apply_nonlinear(const FPDEProblem& problem, const TimePowerSeries& s) {
    check_nonlinearity(problem);
    const TimePowerSeries sx = series_diff_x(s, 1);
    const TimePowerSeries sxx = series_diff_x(s, 2);
    TimePowerSeries acc = TimePowerSeries::zero(s.alpha(), s.domain());
    for (const auto& mono : problem.nonlinear_op) {
        TimePowerSeries part = series_pow(s, mono.u_pow, s.alpha(), s.domain());
        part = series_mul(part, series_pow(sx, mono.ux_pow, s.alpha(), s.domain()));
        part = series_mul(part, series_pow(sxx, mono.uxx_pow, s.alpha(), s.domain()));
        acc = series_add(acc, series_scale(part, mono.coeff.simplify_basic()));
    }
    return acc;
}

TimePowerSeries source_series(const FPDEProblem& problem) {
    std::vector<SeriesTerm> terms;
    for (const auto& st : problem.source)
        terms.push_back({{Rational(st.t_power), 0}, st.coeff});
    return TimePowerSeries(problem.alpha, problem.domain, std::move(terms));
}

// ---------------------------------------------------------------------------
// recursions

namespace {

SeriesSolution solve_common(const FPDEProblem& problem, int n, bool use_sumudu_pipeline) {
    problem.validate();
    check_nonlinearity(problem);
    if (n < 1) throw DomainError("term count n must be >= 1");
    const double alpha = problem.alpha;
    const SpatialDomain domain = problem.domain;

    // u_0 = G = g(x) + J^alpha f
    TimePowerSeries u0 = TimePowerSeries::single(alpha, domain, {Rational(0), 0},
                                                 problem.ic.simplify_basic());
    const TimePowerSeries f = source_series(problem);
    if (!f.empty()) u0 = series_add(u0, frac_integral(f, alpha));

    std::vector<TimePowerSeries> terms{u0};
    for (int k = 1; k <= n; ++k) {
        const TimePowerSeries& prev = terms.back();
        TimePowerSeries h = use_sumudu_pipeline ? he_polynomial(problem, terms, k - 1)
                                                : adomian_polynomial(problem, terms, k - 1);
        TimePowerSeries w = series_add(apply_linear(problem, prev), h);
        TimePowerSeries step =
            use_sumudu_pipeline
                ? sumudu_inverse(sumudu_scale(sumudu_forward(w), alpha))
                : frac_integral(w, alpha);
        // Rhs form integrates +J^alpha(R u + H); Lhs form flips the sign.
        if (problem.form == EquationForm::Lhs)
            step = series_scale(step, Expr::constant(-1.0));
        terms.push_back(std::move(step));
    }

    SeriesSolution sol;
    sol.problem_name = problem.name;
    sol.alpha = alpha;
    sol.n_terms = n;
    sol.terms = terms;
    TimePowerSeries sum = terms[0];
    for (std::size_t k = 1; k < terms.size(); ++k) sum = series_add(sum, terms[k]);
    sol.partial_sum = std::move(sum);

    sol.diagnostic_ratios =
        convergence_ratios(sol, kDiagnosticProbe, sample_points(domain.lo, domain.hi,
                                                                kCanonicalPoints));
    sol.non_convergence_warning =
        std::any_of(sol.diagnostic_ratios.begin(), sol.diagnostic_ratios.end(),
                    [](double r) { return r > 1.0; });
    return sol;
}

} // namespace

SeriesSolution hpstm_solve(const FPDEProblem& problem, int n) {
    return solve_common(problem, n, /*use_sumudu_pipeline=*/true);
}

SeriesSolution adm_solve(const FPDEProblem& problem, int n) {
    return solve_common(problem, n, /*use_sumudu_pipeline=*/false);
}

std::vector<double> convergence_ratios(const SeriesSolution& sol, double t_probe,
                                       const std::vector<double>& x_samples) {
    if (!(t_probe > 0.0)) throw DomainError("convergence probe requires t > 0");
    std::vector<double> norms;
    for (const auto& term : sol.terms) {
        if (term.empty()) continue;
        double sup = 0.0;
        for (double x : x_samples)
            sup = std::max(sup, std::abs(evaluate_series(term, x, t_probe)));
        norms.push_back(sup);
    }
    std::vector<double> ratios;
    for (std::size_t k = 0; k + 1 < norms.size(); ++k)
        ratios.push_back(norms[k] == 0.0 ? 0.0 : norms[k + 1] / norms[k]);
    return ratios;
}

} // namespace fracsol
