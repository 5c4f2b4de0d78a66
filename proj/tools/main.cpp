#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracsol/comparators.hpp"
#include "fracsol/errors.hpp"
#include "fracsol/problem.hpp"
#include "fracsol/report.hpp"
#include "fracsol/series_io.hpp"
#include "fracsol/solvers.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitNumericalError = 3;

std::string resolve_problem_path(const std::string& arg) {
    if (fs::exists(arg)) return arg;
    std::vector<std::string> dirs;
    if (const char* env = std::getenv("FRACSOL_PROBLEM_DIR")) dirs.push_back(env);
#ifdef FRACSOL_DATA_DIR
    dirs.push_back(FRACSOL_DATA_DIR);
#endif
    for (const auto& dir : dirs) {
        const fs::path candidate = fs::path(dir) / (arg + ".json");
        if (fs::exists(candidate)) return candidate.string();
    }
    throw fracsol::IoError("problem not found: " + arg +
                           " (expected a file path or a bundled problem name)");
}

struct PointOption {
    double x = 1.0;
    double t = 0.5;
};

PointOption parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw fracsol::ValidationError("point must be written as x,t", "--point");
    try {
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw fracsol::ValidationError("point must be written as x,t", "--point");
    }
}

template <typename Report>
void write_report(const Report& report, const std::string& out_path) {
    if (out_path.empty()) {
        fracsol::emit_csv(report, std::cout);
    } else {
        fracsol::emit_csv_file(report, out_path);
    }
}

int run(int argc, char** argv) {
    CLI::App app{"HPSTM/ADM series solvers for time-fractional PDEs with FDM and RBF "
                 "comparators"};
    app.require_subcommand(1);

    std::string problem_arg;
    std::vector<double> alphas;
    std::string point_text = "1,0.5";
    std::string out_path;
    int terms = 0; // 0 means "use the problem file's default"

    auto add_common = [&](CLI::App* cmd, bool with_point) {
        cmd->add_option("problem", problem_arg, "problem file path or bundled name")
            ->required();
        cmd->add_option("--alpha", alphas, "fractional order (repeatable; default from file)");
        cmd->add_option("--terms", terms, "series term count n");
        if (with_point) cmd->add_option("--point", point_text, "evaluation point x,t");
        cmd->add_option("--out", out_path, "output file (default: stdout)");
    };

    auto* solve_cmd = app.add_subcommand("solve", "run one series solve and print the terms");
    std::string method = "hpstm";
    add_common(solve_cmd, false);
    solve_cmd->add_option("--method", method, "hpstm or adm")
        ->check(CLI::IsMember({"hpstm", "adm"}));

    auto* compare_cmd =
        app.add_subcommand("compare", "evaluate all methods at a point with reference fixtures");
    add_common(compare_cmd, true);

    auto* sensitivity_cmd =
        app.add_subcommand("sensitivity", "alpha x n grid with residual diagnostics");
    std::vector<int> ns{3, 5, 7};
    add_common(sensitivity_cmd, true);
    sensitivity_cmd->add_option("--ns", ns, "term counts for the grid");

    auto* figures_cmd = app.add_subcommand("figures", "emit u(x,t) curves per alpha as CSV");
    add_common(figures_cmd, true);

    auto* fixtures_cmd = app.add_subcommand("fixtures", "dump the transcribed reference tables");
    fixtures_cmd->add_option("--out", out_path, "output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    if (app.got_subcommand(fixtures_cmd)) {
        if (out_path.empty()) {
            fracsol::emit_fixtures_csv(std::cout);
        } else {
            std::ofstream out(out_path);
            if (!out) throw fracsol::IoError("cannot open output file: " + out_path);
            fracsol::emit_fixtures_csv(out);
        }
        return kExitOk;
    }

    const fracsol::LoadedProblem lp = fracsol::load_problem(resolve_problem_path(problem_arg));
    if (alphas.empty()) alphas = lp.alphas;
    const int n = terms > 0 ? terms : lp.default_terms;
    const PointOption point = parse_point(point_text);

    if (app.got_subcommand(solve_cmd)) {
        if (!out_path.empty() && alphas.size() != 1)
            throw fracsol::ValidationError("--out expects exactly one --alpha", "--out");
        for (double alpha : alphas) {
            const fracsol::FPDEProblem p = lp.problem.with_alpha(alpha);
            const fracsol::SeriesSolution sol = method == "adm"
                                                    ? fracsol::adm_solve(p, n)
                                                    : fracsol::hpstm_solve(p, n);
            std::cout << lp.problem.name << " alpha=" << alpha << " n=" << n << " ("
                      << method << ")\n";
            for (int k = 0; k <= sol.n_terms; ++k) {
                const auto& term = sol.terms[static_cast<std::size_t>(k)];
                std::cout << "  u_" << k << ": ";
                if (term.empty()) {
                    std::cout << "0\n";
                    continue;
                }
                bool first = true;
                for (const auto& tterm : term.terms()) {
                    if (!first) std::cout << " + ";
                    std::cout << "(" << tterm.coeff.str() << ") * t^(" << tterm.exponent.str()
                              << ")";
                    first = false;
                }
                std::cout << "\n";
            }
            if (sol.non_convergence_warning)
                std::cout << "  warning: term-ratio diagnostic exceeds 1 at t = "
                          << fracsol::kDiagnosticProbe << "\n";
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                if (!out) throw fracsol::IoError("cannot open output file: " + out_path);
                out << fracsol::solution_to_text(sol);
            }
        }
        return kExitOk;
    }

    if (app.got_subcommand(compare_cmd)) {
        write_report(fracsol::run_comparison(lp, alphas, point.x, point.t, n), out_path);
        return kExitOk;
    }
    if (app.got_subcommand(sensitivity_cmd)) {
        write_report(fracsol::run_sensitivity(lp, alphas, ns, point.x, point.t), out_path);
        return kExitOk;
    }
    if (app.got_subcommand(figures_cmd)) {
        write_report(fracsol::run_figures(lp, alphas, point.x, n), out_path);
        return kExitOk;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const fracsol::SyntaxError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const fracsol::UnknownSymbol& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const fracsol::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const fracsol::ValidationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const fracsol::IoError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const fracsol::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumericalError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
