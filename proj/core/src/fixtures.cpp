#include "fracsol/fixtures.hpp"

namespace fracsol {

namespace {

std::vector<PaperFixture> build_fixtures() {
    std::vector<PaperFixture> fx;
    auto row = [&](int id, const char* label, const char* problem, double alpha,
                   const char* method, double value) {
        fx.push_back({id, label, problem, alpha, method, value});
    };

    // Table 2: absolute error for example 1 at x=1, t=0.5
    row(2, "porous_error", "example1", 1.0, "AbsError", 0.0);
    row(2, "porous_error", "example1", 0.9, "AbsError", 3.12e-3);
    row(2, "porous_error", "example1", 0.8, "AbsError", 1.47e-2);
    row(2, "porous_error", "example1", 0.7, "AbsError", 4.83e-2);

    // Table 3: method comparison for example 1 at x=1, t=0.5
    struct CompareRow {
        double alpha;
        double v[6];
    };
    const char* methods[6] = {"HPSTM", "ADM", "Meshless", "VIM", "FDM", "Spectral"};
    const CompareRow porous[4] = {
        {1.0, {1.500, 1.500, 1.500, 1.500, 1.498, 1.499}},
        {0.9, {1.478, 1.478, 1.480, 1.479, 1.475, 1.477}},
        {0.8, {1.459, 1.459, 1.462, 1.460, 1.455, 1.458}},
        {0.7, {1.442, 1.442, 1.446, 1.443, 1.438, 1.441}},
    };
    for (const auto& r : porous)
        for (int m = 0; m < 6; ++m) row(3, "porous_compare", "example1", r.alpha, methods[m], r.v[m]);

    // Table 4: HPSTM/ADM values for example 2 at x=1, t=0.5
    const double heat_vals[4][2] = {{1.0, 0.9231}, {0.9, 0.9287}, {0.8, 0.9345}, {0.7, 0.9404}};
    for (const auto& r : heat_vals) {
        row(4, "heat_results", "example2", r[0], "HPSTM", r[1]);
        row(4, "heat_results", "example2", r[0], "ADM", r[1]);
    }

    // Table 5: absolute error for example 2
    row(5, "heat_error", "example2", 1.0, "AbsError", 0.0);
    row(5, "heat_error", "example2", 0.9, "AbsError", 5.60e-3);
    row(5, "heat_error", "example2", 0.8, "AbsError", 1.14e-2);
    row(5, "heat_error", "example2", 0.7, "AbsError", 1.73e-2);

    // Table 6: method comparison for example 2
    const CompareRow heat[4] = {
        {1.0, {0.9231, 0.9231, 0.9240, 0.9232, 0.9225, 0.9230}},
        {0.9, {0.9287, 0.9287, 0.9295, 0.9288, 0.9278, 0.9286}},
        {0.8, {0.9345, 0.9345, 0.9352, 0.9346, 0.9335, 0.9344}},
        {0.7, {0.9404, 0.9404, 0.9410, 0.9405, 0.9392, 0.9403}},
    };
    for (const auto& r : heat)
        for (int m = 0; m < 6; ++m) row(6, "heat_compare", "example2", r.alpha, methods[m], r.v[m]);

    // Table 7: HPSTM/ADM values for example 3 at x=1, t=0.5
    const double fisher_vals[4][2] = {{1.0, 0.3033}, {0.9, 0.2987}, {0.8, 0.2942}, {0.7, 0.2898}};
    for (const auto& r : fisher_vals) {
        row(7, "fisher_results", "example3", r[0], "HPSTM", r[1]);
        row(7, "fisher_results", "example3", r[0], "ADM", r[1]);
    }

    // Table 8: absolute error for example 3
    row(8, "fisher_error", "example3", 1.0, "AbsError", 0.0);
    row(8, "fisher_error", "example3", 0.9, "AbsError", 4.60e-3);
    row(8, "fisher_error", "example3", 0.8, "AbsError", 9.10e-3);
    row(8, "fisher_error", "example3", 0.7, "AbsError", 1.35e-2);

    // Table 9: method comparison for example 3
    const CompareRow fisher[4] = {
        {1.0, {0.3033, 0.3033, 0.3040, 0.3034, 0.3028, 0.3032}},
        {0.9, {0.2987, 0.2987, 0.2994, 0.2988, 0.2980, 0.2986}},
        {0.8, {0.2942, 0.2942, 0.2948, 0.2943, 0.2935, 0.2941}},
        {0.7, {0.2898, 0.2898, 0.2903, 0.2899, 0.2890, 0.2897}},
    };
    for (const auto& r : fisher)
        for (int m = 0; m < 6; ++m) row(9, "fisher_compare", "example3", r.alpha, methods[m], r.v[m]);

    return fx;
}

} // namespace

const std::vector<PaperFixture>& paper_fixtures() {
    static const std::vector<PaperFixture> fx = build_fixtures();
    return fx;
}

std::optional<double> fixture_value(const std::string& label, double alpha,
                                    const std::string& method) {
    for (const auto& f : paper_fixtures())
        if (f.label == label && f.alpha == alpha && f.method == method) return f.value;
    return std::nullopt;
}

} // namespace fracsol
