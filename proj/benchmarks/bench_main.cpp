#include <benchmark/benchmark.h>

#include <string>

#include "fracsol/comparators.hpp"
#include "fracsol/gamma.hpp"
#include "fracsol/problem.hpp"
#include "fracsol/solvers.hpp"

namespace {

fracsol::LoadedProblem bundled(const char* name) {
    return fracsol::load_problem(std::string(FRACSOL_DATA_DIR) + "/" + name + ".json");
}

void BM_Gamma(benchmark::State& state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fracsol::special::gamma(x));
        x = x < 29.0 ? x + 0.37 : 0.1;
    }
}
BENCHMARK(BM_Gamma);

void BM_ParseDifferentiate(benchmark::State& state) {
    for (auto _ : state) {
        auto e = fracsol::parse("50*exp(x)*(-1+2*exp(x))/(1+exp(x))^4");
        benchmark::DoNotOptimize(e.differentiate(2).evaluate(0.7));
    }
}
BENCHMARK(BM_ParseDifferentiate);

void BM_HpstmSolveFisher(benchmark::State& state) {
    auto lp = bundled("example3");
    auto p = lp.problem.with_alpha(0.9);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto sol = fracsol::hpstm_solve(p, n);
        benchmark::DoNotOptimize(fracsol::evaluate_series(sol.partial_sum, 1.0, 0.5));
    }
}
BENCHMARK(BM_HpstmSolveFisher)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_AdmSolveHeat(benchmark::State& state) {
    auto lp = bundled("example2");
    auto p = lp.problem.with_alpha(0.9);
    for (auto _ : state) {
        auto sol = fracsol::adm_solve(p, 5);
        benchmark::DoNotOptimize(fracsol::evaluate_series(sol.partial_sum, 1.0, 0.5));
    }
}
BENCHMARK(BM_AdmSolveHeat)->Unit(benchmark::kMillisecond);

void BM_FdmL1Solve(benchmark::State& state) {
    auto lp = bundled("example1");
    auto p = lp.problem.with_alpha(0.8);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto g = fracsol::fdm_l1_solve(p, n, n, 1.0);
        benchmark::DoNotOptimize(g.value_at(1.0, 0.5));
    }
}
BENCHMARK(BM_FdmL1Solve)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_RbfCollocation(benchmark::State& state) {
    auto lp = bundled("example1");
    auto p = lp.problem.with_alpha(1.0);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = fracsol::rbf_collocation_solve(p, n, 2.0, 50, 1.0);
        benchmark::DoNotOptimize(r.value_at(1.0, 0.5));
    }
}
BENCHMARK(BM_RbfCollocation)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
