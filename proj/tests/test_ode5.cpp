#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bs5/ode5.hpp"

using namespace bs5;

TEST_CASE("coefficient values and identities") {
    const auto c1 = ode::coefficients(1.0);
    CHECK(c1[5] == doctest::Approx(-3.0).epsilon(1e-12));
    for (double y : {0.3, 0.6, 0.9}) {
        const auto c = ode::coefficients(y);
        CHECK(c[1] + y * c[0] == 0.0);
    }
}

TEST_CASE("simplified coefficients match the raw expressions") {
    for (double y : {0.4, 0.8, 0.15, 0.95}) {
        const auto cs = ode::coefficients(y);
        const auto cr = ode::coefficients_raw(y);
        for (int j = 0; j < 6; ++j)
            CHECK(cs[j] == doctest::Approx(cr[j]).epsilon(1e-8));
    }
}

TEST_CASE("boundary values reproduced exactly at y=1") {
    const auto sol = ode::solve();
    const double bc[5] = {0.2, 0.0, -0.2, 1.0, -3.6};
    for (int order = 0; order < 5; ++order) CHECK(sol.eval(1.0, order) == bc[order]);
    CHECK(sol.eval(1.0, 1) == 0.0);
}

TEST_CASE("near-boundary Taylor behavior") {
    const auto sol = ode::solve();
    // B1''(1) = -1/5, B1'''(1) = 1, so B1''(0.999) = -1/5 - 1e-3 + O(1e-6).
    CHECK(sol.eval(0.999, 2) == doctest::Approx(-0.2 - 1e-3).epsilon(2e-5));
}

TEST_CASE("ODE residual along the solution") {
    const auto sol = ode::solve();
    for (int p = 0; p < 100; ++p) {
        const double y = sol.y_min() + (1.0 - sol.y_min()) * (p + 0.5) / 100.0;
        const auto c = ode::coefficients(y);
        double res = c[5] * sol.fifth_derivative(y);
        double scale = std::abs(res);
        for (int j = 0; j < 5; ++j) {
            const double t = c[j] * sol.eval(y, j);
            res += t;
            scale += std::abs(t);
        }
        CHECK(std::abs(res) / scale < 1e-7);
    }
}

TEST_CASE("tolerance halving") {
    const auto sol = ode::solve();
    ode::SolverConfig tight;
    tight.rel_tol = 1e-12;
    tight.abs_tol = 1e-14;
    tight.max_step /= 2.0;
    const auto sol2 = ode::solve(tight);
    CHECK(sol.eval(0.5, 0) == doctest::Approx(sol2.eval(0.5, 0)).epsilon(1e-8));
    // Reference value pinned from two independent integrator implementations.
    CHECK(sol.eval(0.5, 0) == doctest::Approx(0.1503453050420052).epsilon(1e-10));
}

TEST_CASE("direction independence: restart from an interior checkpoint") {
    const auto sol = ode::solve();
    ode::State u;
    for (int d = 0; d < 5; ++d) u[d] = sol.eval(0.5, d);
    const auto sol2 = ode::solve({}, u, 0.5);
    for (double y : {0.4, 0.2, 0.05, 0.001})
        CHECK(sol.eval(y, 0) == doctest::Approx(sol2.eval(y, 0)).epsilon(1e-8));
}

TEST_CASE("dense output continuity and interior smoothness") {
    const auto sol = ode::solve();
    for (double y : {0.9, 0.63, 0.31, 0.07}) {
        for (int order = 0; order <= 4; ++order) {
            const double mid = sol.eval(y, order);
            CHECK(sol.eval(y - 1e-9, order) == doctest::Approx(mid).epsilon(1e-7));
            CHECK(sol.eval(y + 1e-9, order) == doctest::Approx(mid).epsilon(1e-7));
        }
    }
}

TEST_CASE("domain handling") {
    const auto sol = ode::solve();
    CHECK_THROWS_AS(sol.eval(1e-5, 0), std::domain_error);
    CHECK_NOTHROW(sol.eval(1e-5, 0, true));
    CHECK_THROWS_AS(sol.eval(1.1, 0), std::domain_error);
    CHECK_THROWS_AS(sol.eval(0.5, 5), std::invalid_argument);
}

TEST_CASE("singularity guard near y=0") {
    ode::SolverConfig cfg;
    cfg.y_min = 1e-7;
    CHECK_THROWS_AS(ode::solve(cfg), std::runtime_error);
}

TEST_CASE("diagnostics") {
    const auto sol = ode::solve();
    const auto& d = sol.diagnostics();
    CHECK(d.accepted_steps > 100);
    CHECK(d.c5_sign == -1.0);      // c5 < 0 on (0, 1]
    CHECK(d.min_abs_c5 > 0.0);
    CHECK(d.min_abs_c5 < 1e-8);    // c5 -> 0 as y -> 0
}
