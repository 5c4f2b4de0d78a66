#include "fracsol/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "fracsol/comparators.hpp"
#include "fracsol/errors.hpp"
#include "fracsol/fixtures.hpp"
#include "fracsol/solvers.hpp"

namespace fracsol {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }

struct TableNames {
    std::string compare;
    std::string error;
    std::string results; // empty when there is no separate results table
};

std::optional<TableNames> table_names(const std::string& problem) {
    if (problem == "example1") return TableNames{"porous_compare", "porous_error", ""};
    if (problem == "example2") return TableNames{"heat_compare", "heat_error", "heat_results"};
    if (problem == "example3")
        return TableNames{"fisher_compare", "fisher_error", "fisher_results"};
    return std::nullopt;
}

int table_id_of(const std::string& label) {
    for (const auto& f : paper_fixtures())
        if (f.label == label) return f.table_id;
    return 0;
}

} // namespace

std::optional<std::function<double(double, double)>> exact_reference(
    const std::string& problem_name) {
    if (problem_name == "example1")
        return [](double x, double t) { return x + t; };
    if (problem_name == "example2")
        return [](double x, double t) { return (1.0 + 2.0 * x) / (x * x + x + 1.0 + 6.0 * t); };
    if (problem_name == "example3")
        return [](double x, double t) {
            const double e = std::exp(x - 5.0 * t);
            return 1.0 / ((1.0 + e) * (1.0 + e));
        };
    return std::nullopt;
}

ComparisonReport run_comparison(const LoadedProblem& lp, const std::vector<double>& alphas,
                                double x, double t, int n) {
    if (n < 1) throw DomainError("run_comparison requires n >= 1");
    const FPDEProblem& base = lp.problem;
    if (x < base.domain.lo || x > base.domain.hi)
        throw DomainError("comparison point lies outside the problem domain");

    ComparisonReport report;
    report.problem = base.name;
    report.x = x;
    report.t = t;
    report.n_terms = n;

    const auto names = table_names(base.name);
    const auto exact = exact_reference(base.name);
    const double T = std::max(t, 0.01);

    for (double alpha : alphas) {
        const FPDEProblem p = base.with_alpha(alpha);
        auto fixture_of = [&](const std::string& label,
                              const std::string& method) -> std::optional<double> {
            if (!names || label.empty()) return std::nullopt;
            return fixture_value(label, alpha, method);
        };
        auto push = [&](const std::string& method, std::optional<double> value,
                        const std::string& label, const std::string& fixture_method,
                        const std::string& note = "") {
            ComparisonRow row;
            row.alpha = alpha;
            row.method = method;
            row.value = value;
            row.fixture = fixture_of(label, fixture_method);
            if (row.value && row.fixture) row.discrepancy = std::abs(*row.value - *row.fixture);
            if (row.fixture) {
                row.fixture_label = label;
                row.fixture_table = table_id_of(label);
            }
            row.note = note;
            report.rows.push_back(std::move(row));
        };

        std::optional<double> hpstm_value;
        const std::string cmp = names ? names->compare : "";
        const std::string err = names ? names->error : "";
        const std::string res = names ? names->results : "";

        try {
            SeriesSolution sol = hpstm_solve(p, n);
            hpstm_value = evaluate_series(sol.partial_sum, x, t);
            push("hpstm", hpstm_value, cmp, "HPSTM");
        } catch (const Error& e) {
            push("hpstm", std::nullopt, cmp, "HPSTM", e.what());
        }
        try {
            SeriesSolution sol = adm_solve(p, n);
            push("adm", evaluate_series(sol.partial_sum, x, t), cmp, "ADM");
        } catch (const Error& e) {
            push("adm", std::nullopt, cmp, "ADM", e.what());
        }
        try {
            RBFSolution sol = rbf_collocation_solve(p, 100, 0.1, 100, T);
            push("rbf", sol.value_at(x, t), cmp, "Meshless");
        } catch (const Error& e) {
            push("rbf", std::nullopt, cmp, "Meshless", e.what());
        }
        try {
            GridSolution sol = fdm_l1_solve(p, 100, 100, T);
            push("fdm", sol.value_at(x, t), cmp, "FDM");
        } catch (const Error& e) {
            push("fdm", std::nullopt, cmp, "FDM", e.what());
        }
        push("vim", std::nullopt, cmp, "VIM");
        push("spectral", std::nullopt, cmp, "Spectral");
        if (exact && hpstm_value)
            push("abs_error_hpstm", std::abs((*exact)(x, t) - *hpstm_value), err, "AbsError");
        else
            push("abs_error_hpstm", std::nullopt, err, "AbsError");
        if (!res.empty()) {
            push("hpstm_results", std::nullopt, res, "HPSTM");
            push("adm_results", std::nullopt, res, "ADM");
        }
    }
    return report;
}

SensitivityReport run_sensitivity(const LoadedProblem& lp, const std::vector<double>& alphas,
                                  const std::vector<int>& ns, double x, double t) {
    if (ns.empty()) throw DomainError("run_sensitivity requires a nonempty term-count list");
    SensitivityReport report;
    report.problem = lp.problem.name;
    report.x = x;
    report.t = t;
    const std::vector<double> grid =
        sample_points(lp.problem.domain.lo, lp.problem.domain.hi, kCanonicalPoints);
    for (double alpha : alphas) {
        const FPDEProblem p = lp.problem.with_alpha(alpha);
        for (int n : ns) {
            const auto start = std::chrono::steady_clock::now();
            SeriesSolution sol = hpstm_solve(p, n);
            SensitivityCell cell;
            cell.alpha = alpha;
            cell.n = n;
            cell.value = evaluate_series(sol.partial_sum, x, t);
            cell.residual = residual_norm(p, sol, {x}, {kSensitivityResidualT});
            // contraction estimate in the domain sup norm at the residual probe
            cell.max_ratio = 0.0;
            for (double r : convergence_ratios(sol, kSensitivityResidualT, grid))
                cell.max_ratio = std::max(cell.max_ratio, r);
            const auto stop = std::chrono::steady_clock::now();
            cell.wall_ms =
                std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count() /
                1000.0;
            report.cells.push_back(cell);
        }
    }
    return report;
}

FigureReport run_figures(const LoadedProblem& lp, const std::vector<double>& alphas, double x,
                         int n) {
    FigureReport report;
    report.problem = lp.problem.name;
    report.x = x;
    report.alphas = alphas;
    for (int i = 0; i <= 100; ++i) report.t_values.push_back(i / 100.0);
    for (double alpha : alphas) {
        SeriesSolution sol = hpstm_solve(lp.problem.with_alpha(alpha), n);
        std::vector<double> row;
        row.reserve(report.t_values.size());
        for (double t : report.t_values)
            row.push_back(evaluate_series(sol.partial_sum, x, t));
        report.values.push_back(std::move(row));
    }
    return report;
}

void emit_csv(const ComparisonReport& report, std::ostream& out) {
    out << "alpha,method,value,fixture,abs_discrepancy\n";
    for (const auto& row : report.rows) {
        out << fmt(row.alpha) << ',' << row.method << ',' << fmt_opt(row.value) << ','
            << fmt_opt(row.fixture) << ',' << fmt_opt(row.discrepancy) << '\n';
    }
}

void emit_csv(const SensitivityReport& report, std::ostream& out) {
    out << "alpha,n,value,residual,max_term_ratio,wall_ms\n";
    for (const auto& c : report.cells) {
        out << fmt(c.alpha) << ',' << c.n << ',' << fmt(c.value) << ',' << fmt(c.residual)
            << ',' << fmt(c.max_ratio) << ',' << fmt(c.wall_ms) << '\n';
    }
}

void emit_csv(const FigureReport& report, std::ostream& out) {
    out << "alpha,t,u\n";
    for (std::size_t a = 0; a < report.alphas.size(); ++a)
        for (std::size_t i = 0; i < report.t_values.size(); ++i)
            out << fmt(report.alphas[a]) << ',' << fmt(report.t_values[i]) << ','
                << fmt(report.values[a][i]) << '\n';
}

void emit_fixtures_csv(std::ostream& out) {
    out << "table,label,problem,alpha,method,value\n";
    for (const auto& f : paper_fixtures())
        out << f.table_id << ',' << f.label << ',' << f.problem << ',' << fmt(f.alpha) << ','
            << f.method << ',' << fmt(f.value) << '\n';
}

template <typename Report>
void emit_csv_file(const Report& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open output file: " + path);
    emit_csv(report, out);
    if (!out) throw IoError("failed while writing: " + path);
}

template void emit_csv_file<ComparisonReport>(const ComparisonReport&, const std::string&);
template void emit_csv_file<SensitivityReport>(const SensitivityReport&, const std::string&);
template void emit_csv_file<FigureReport>(const FigureReport&, const std::string&);

} // namespace fracsol
