#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fracsol/comparators.hpp"
#include "fracsol/errors.hpp"
#include "fracsol/gamma.hpp"
#include "fracsol/linalg.hpp"
#include "fracsol/problem.hpp"
#include "fracsol/solvers.hpp"

using namespace fracsol;

namespace {

LoadedProblem bundled(const char* name) {
    return load_problem(std::string(FRACSOL_DATA_DIR) + "/" + name + ".json");
}

} // namespace

TEST_CASE("L1 weights: b_0 = 1, strictly decreasing, telescoping sum") {
    for (double alpha : {0.3, 0.7, 0.9}) {
        CAPTURE(alpha);
        CHECK(l1_weight(0, alpha) == doctest::Approx(1.0));
        double prev = l1_weight(0, alpha);
        double sum = prev;
        for (int j = 1; j < 40; ++j) {
            const double b = l1_weight(j, alpha);
            CHECK(b < prev);
            prev = b;
            sum += b;
        }
        CHECK(sum == doctest::Approx(std::pow(40.0, 1.0 - alpha)).epsilon(1e-12));
    }
    // classical limit: backward Euler weights
    CHECK(l1_weight(0, 1.0) == doctest::Approx(1.0));
    CHECK(l1_weight(1, 1.0) == doctest::Approx(0.0));
    CHECK(l1_weight(7, 1.0) == doctest::Approx(0.0));
}

TEST_CASE("tridiagonal and pivoted-QR solvers") {
    // tridiagonal: -u'' = 1 style system sanity
    auto x = linalg::solve_tridiagonal({1.0, 1.0}, {2.0, 2.0, 2.0}, {1.0, 1.0},
                                       {1.0, 2.0, 3.0});
    CHECK(2 * x[0] + x[1] == doctest::Approx(1.0));
    CHECK(x[0] + 2 * x[1] + x[2] == doctest::Approx(2.0));
    CHECK(x[1] + 2 * x[2] == doctest::Approx(3.0));

    // QR reproduces an easy dense solve
    std::vector<double> a = {4, 1, 0, 1, 3, 1, 0, 1, 2};
    auto f = linalg::qr_factor_col_pivot(a, 3);
    CHECK(f.rank == 3);
    auto y = linalg::qr_solve(f, {1.0, 2.0, 3.0});
    CHECK(4 * y[0] + y[1] == doctest::Approx(1.0));
    CHECK(y[0] + 3 * y[1] + y[2] == doctest::Approx(2.0));
    CHECK(y[1] + 2 * y[2] == doctest::Approx(3.0));

    // rank deficiency is detected and the kept block still solves
    std::vector<double> s = {1, 2, 2, 4.0000000000000001, 1, 2, 2, 4, 1, 2, 2, 4, 1, 2, 2, 4};
    auto fs = linalg::qr_factor_col_pivot(s, 4);
    CHECK(fs.rank < 4);
    CHECK(linalg::qr_condition_estimate(fs) >= 1.0);
}

TEST_CASE("fdm matches x + t for the porous-medium problem at alpha = 1") {
    auto lp = bundled("example1");
    auto g = fdm_l1_solve(lp.problem.with_alpha(1.0), 100, 100, 1.0);
    CHECK(std::abs(g.value_at(1.0, 0.5) - 1.5) < 5e-3);
    // grid metadata and exact IC row
    CHECK(g.x.size() == 100);
    CHECK(g.t.size() == 100);
    for (std::size_t i = 0; i < g.x.size(); ++i)
        CHECK(g.u[i][0] == lp.problem.ic.evaluate(g.x[i]));
}

TEST_CASE("fdm error decreases under refinement at alpha = 0.8") {
    auto lp = bundled("example1");
    auto p = lp.problem.with_alpha(0.8);
    // the two-term series is exact for this problem
    auto sol = hpstm_solve(p, 5);
    const double want = evaluate_series(sol.partial_sum, 1.0, 0.5);
    const double e100 = std::abs(fdm_l1_solve(p, 100, 100, 1.0).value_at(1.0, 0.5) - want);
    const double e200 = std::abs(fdm_l1_solve(p, 200, 200, 1.0).value_at(1.0, 0.5) - want);
    CHECK(e200 < e100);
}

TEST_CASE("fdm tracks the exact heat-transfer solution at alpha = 1") {
    auto lp = bundled("example2");
    auto g = fdm_l1_solve(lp.problem.with_alpha(1.0), 100, 100, 0.05);
    const double exact = 3.0 / (3.0 + 6.0 * 0.05);
    CHECK(std::abs(g.value_at(1.0, 0.05) - exact) < 2e-3);
}

TEST_CASE("fdm argument validation and query bounds") {
    auto lp = bundled("example1");
    CHECK_THROWS_AS(fdm_l1_solve(lp.problem, 4, 100, 1.0), DomainError);
    CHECK_THROWS_AS(fdm_l1_solve(lp.problem, 100, 100, 0.0), DomainError);
    auto g = fdm_l1_solve(lp.problem.with_alpha(1.0), 16, 16, 0.5);
    CHECK_THROWS_AS(g.value_at(100.0, 0.1), DomainError);
    CHECK_THROWS_AS(g.value_at(1.0, 2.0), DomainError);
}

TEST_CASE("rbf collocation hits the reference configuration on example 1") {
    auto lp = bundled("example1");
    auto r = rbf_collocation_solve(lp.problem.with_alpha(1.0), 100, 0.1, 100, 1.0);
    CHECK(std::abs(r.value_at(1.0, 0.5) - 1.5) < 2e-3);
    CHECK(r.centers.size() == 100);
    CHECK(r.lambda.size() == 100);
    CHECK(r.cond_estimate > 1.0);
}

TEST_CASE("rbf interpolation consistency at the centers") {
    auto lp = bundled("example3");
    auto r = rbf_collocation_solve(lp.problem.with_alpha(1.0), 60, 3.0, 4, 0.01);
    for (std::size_t i = 0; i < r.centers.size(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < r.centers.size(); ++j) {
            const double d = r.centers[i] - r.centers[j];
            s += r.lambda[0][j] * std::exp(-r.eps * r.eps * d * d);
        }
        CHECK(std::abs(s - lp.problem.ic.evaluate(r.centers[i])) < 1e-8);
    }
}

TEST_CASE("rbf reconstructs the Fisher initial condition between centers") {
    auto lp = bundled("example3");
    auto r = rbf_collocation_solve(lp.problem.with_alpha(1.0), 100, 1.0, 4, 0.01);
    double maxerr = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double x = -4.0 + 10.0 * i / 200.0;
        maxerr = std::max(maxerr, std::abs(r.value_at(x, 0.0) - lp.problem.ic.evaluate(x)));
    }
    CHECK(maxerr < 1e-6);
}

TEST_CASE("rbf max error decreases with the center count") {
    auto lp = bundled("example1");
    auto p = lp.problem.with_alpha(1.0);
    double prev = 1e300;
    for (int N : {10, 20, 40, 80}) {
        auto s = rbf_collocation_solve(p, N, 2.0, 100, 1.0);
        double maxerr = 0.0;
        for (double t : {0.25, 0.5, 0.75, 1.0})
            for (int i = 0; i <= 50; ++i) {
                const double x = 0.5 + 5.5 * i / 50.0;
                maxerr = std::max(maxerr, std::abs(s.value_at(x, t) - (x + t)));
            }
        CAPTURE(N);
        CHECK(maxerr < prev);
        prev = maxerr;
    }
}

TEST_CASE("rbf rejects a kernel that cannot resolve the problem") {
    auto lp = bundled("example3");
    // an essentially constant kernel makes boundary and interior rows clash
    CHECK_THROWS_AS(rbf_collocation_solve(lp.problem.with_alpha(1.0), 20, 1e-8, 10, 0.1),
                    IllConditionedError);
    CHECK_THROWS_AS(rbf_collocation_solve(lp.problem, 3, 0.1, 10, 0.1), DomainError);
}

TEST_CASE("residual oracle: example 1 full series is exact") {
    auto lp = bundled("example1");
    for (double alpha : {1.0, 0.8}) {
        auto p = lp.problem.with_alpha(alpha);
        auto sol = hpstm_solve(p, 4);
        const auto xs = sample_points(p.domain.lo, p.domain.hi, 10);
        CHECK(residual_norm(p, sol, xs, {0.1, 0.5, 1.0}) < 1e-10);
    }
}

TEST_CASE("residual decreases with the truncation order at small t") {
    auto lp = bundled("example2");
    auto p = lp.problem.with_alpha(0.9);
    auto s3 = hpstm_solve(p, 3);
    auto s5 = hpstm_solve(p, 5);
    const double r3 = residual_norm(p, s3, {1.0}, {0.01});
    const double r5 = residual_norm(p, s5, {1.0}, {0.01});
    CHECK(r5 <= r3);
    CHECK_THROWS_AS(residual_norm(p, s3, {1.0}, {0.0}), DomainError);
}

TEST_CASE("cross-method sanity band between the series and the grid solver") {
    // example 1 is exact at the table point; examples 2 and 3 are probed at
    // t = 0.05, inside the series' contraction region (at (1, 0.5) their
    // partial sums sit at or beyond the convergence boundary)
    {
        auto lp = bundled("example1");
        for (double alpha : {1.0, 0.9, 0.8, 0.7}) {
            CAPTURE(alpha);
            auto p = lp.problem.with_alpha(alpha);
            auto h = hpstm_solve(p, 5);
            auto g = fdm_l1_solve(p, 100, 100, 1.0);
            CHECK(std::abs(evaluate_series(h.partial_sum, 1.0, 0.5) - g.value_at(1.0, 0.5)) <=
                  5e-2);
        }
    }
    for (const char* name : {"example2", "example3"}) {
        auto lp = bundled(name);
        for (double alpha : {1.0, 0.9, 0.8, 0.7}) {
            CAPTURE(name);
            CAPTURE(alpha);
            auto p = lp.problem.with_alpha(alpha);
            auto h = hpstm_solve(p, 5);
            auto g = fdm_l1_solve(p, 100, 100, 0.05);
            CHECK(std::abs(evaluate_series(h.partial_sum, 1.0, 0.05) - g.value_at(1.0, 0.05)) <=
                  5e-2);
        }
    }
}

TEST_CASE("fill_distance") {
    std::vector<double> eleven;
    for (int i = 0; i <= 10; ++i) eleven.push_back(i / 10.0);
    CHECK(fill_distance(eleven) == doctest::Approx(0.05));
    CHECK(fill_distance({0.0, 1.0}) == doctest::Approx(0.5));
    std::vector<double> coarse, fine;
    for (int i = 0; i < 10; ++i) coarse.push_back(i / 9.0);
    for (int i = 0; i < 20; ++i) fine.push_back(i / 19.0);
    CHECK(fill_distance(fine) < fill_distance(coarse));
    CHECK(fill_distance(fine) == doctest::Approx(fill_distance(coarse) / 2.0).epsilon(0.1));
    CHECK_THROWS_AS(fill_distance({0.5}), DomainError);
}
