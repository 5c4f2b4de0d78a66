#ifndef FRACSOL_REPORT_HPP
#define FRACSOL_REPORT_HPP

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fracsol/problem.hpp"

namespace fracsol {

/// One (alpha, method) cell of a comparison run. `value` is empty for
/// fixture-only methods (VIM, spectral, the results tables) and for
/// comparators that failed; the failure reason lands in `note`.
struct ComparisonRow {
    double alpha = 1.0;
    std::string method;
    std::optional<double> value;
    std::optional<double> fixture;
    std::optional<double> discrepancy;
    std::string fixture_label;
    int fixture_table = 0;
    std::string note;
};

struct ComparisonReport {
    std::string problem;
    double x = 1.0;
    double t = 0.5;
    int n_terms = 5;
    std::vector<ComparisonRow> rows;
};

struct SensitivityCell {
    double alpha = 1.0;
    int n = 5;
    double value = 0.0;     // partial sum at the report point
    double residual = 0.0;  // residual oracle at (x, t = kSensitivityResidualT)
    double max_ratio = 0.0; // term-ratio diagnostic
    double wall_ms = 0.0;
};

struct SensitivityReport {
    std::string problem;
    double x = 1.0;
    double t = 0.5;
    std::vector<SensitivityCell> cells;
};

struct FigureReport {
    std::string problem;
    double x = 1.0;
    std::vector<double> alphas;
    std::vector<double> t_values;
    std::vector<std::vector<double>> values; // values[alpha_index][t_index]
};

/// Residual probe time used by sensitivity cells.
constexpr double kSensitivityResidualT = 0.05;

/// Known closed-form reference solution at alpha = 1, when one exists for a
/// bundled problem.
std::optional<std::function<double(double, double)>> exact_reference(
    const std::string& problem_name);

/// Evaluate every in-scope method at (x, t) for each alpha and join the
/// reference fixtures with discrepancy columns. A failing comparator becomes a
/// missing row, not a run abort.
ComparisonReport run_comparison(const LoadedProblem& lp, const std::vector<double>& alphas,
                                double x, double t, int n);

/// alpha x n grid with value, residual-oracle norm, term-ratio diagnostic and
/// wall time per cell.
SensitivityReport run_sensitivity(const LoadedProblem& lp, const std::vector<double>& alphas,
                                  const std::vector<int>& ns, double x, double t);

/// u(x, t) samples for t in {0, 0.01, ..., 1} per alpha.
FigureReport run_figures(const LoadedProblem& lp, const std::vector<double>& alphas, double x,
                         int n);

void emit_csv(const ComparisonReport& report, std::ostream& out);
void emit_csv(const SensitivityReport& report, std::ostream& out);
void emit_csv(const FigureReport& report, std::ostream& out);
void emit_fixtures_csv(std::ostream& out);

/// Write any of the reports to a file; throws IoError on failure.
template <typename Report>
void emit_csv_file(const Report& report, const std::string& path);

} // namespace fracsol

#endif
