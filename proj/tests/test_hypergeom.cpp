#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "bs5/hypergeom.hpp"

using namespace bs5;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace {

// 50-digit fixed-length series oracle for F_{n,m}.
double oracle_F(int n, int m, double x) {
    const Big nn = Big(n) / 3, mm = Big(m) / 3, xx = x;
    Big t = 1, s = 1;
    for (int k = 0; k < 200; ++k) {
        t *= ((nn + k) * (nn + k) + Big(2) / 9) / ((mm + k) * (1 + k)) * xx;
        s += t;
    }
    return static_cast<double>(s);
}

double fd1(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2 * h);
}

double fd2(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
}

}  // namespace

TEST_CASE("F at 0 and against the high-precision oracle") {
    CHECK(hyp::F(2, 1, 0.0) == 1.0);
    CHECK(hyp::F(4, 5, 0.0) == 1.0);
    for (double x : {0.5, -0.5, 0.3, -0.125}) {
        CHECK(hyp::F(2, 1, x) == doctest::Approx(oracle_F(2, 1, x)).epsilon(1e-13));
        CHECK(hyp::F(4, 5, x) == doctest::Approx(oracle_F(4, 5, x)).epsilon(1e-13));
        CHECK(hyp::F(1, 2, x) == doctest::Approx(oracle_F(1, 2, x)).epsilon(1e-13));
        CHECK(hyp::F(2, 4, x) == doctest::Approx(oracle_F(2, 4, x)).epsilon(1e-13));
    }
}

TEST_CASE("F rejects bad arguments") {
    CHECK_THROWS_AS(hyp::F(2, 0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(hyp::F(2, -3, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(hyp::F(2, 1, 1.0), std::invalid_argument);
    CHECK_NOTHROW(hyp::F(2, -1, 0.1));  // m/3 = -1/3 is not a nonpositive integer
}

TEST_CASE("F_deriv first coefficient and finite differences") {
    for (auto [n, m] : {std::pair{2, 1}, {4, 5}, {1, 2}}) {
        const double expect = ((n / 3.0) * (n / 3.0) + 2.0 / 9.0) / (m / 3.0);
        CHECK(hyp::F_deriv(n, m, 0.0, 1) == doctest::Approx(expect).epsilon(1e-14));
    }
    auto f21 = [](double x) { return hyp::F(2, 1, x); };
    CHECK(hyp::F_deriv(2, 1, 0.3, 1) == doctest::Approx(fd1(f21, 0.3, 1e-6)).epsilon(1e-8));
    auto f45 = [](double x) { return hyp::F(4, 5, x); };
    CHECK(hyp::F_deriv(4, 5, 0.2, 2) == doctest::Approx(fd2(f45, 0.2, 1e-4)).epsilon(1e-6));
}

TEST_CASE("each F satisfies its Gauss hypergeometric ODE") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (auto [n, m] : {std::pair{2, 1}, {4, 5}, {1, 2}, {2, 4}, {5, 7}}) {
        const double ab = (n * n + 2.0) / 9.0, apb = 2.0 * n / 3.0, c = m / 3.0;
        for (int p = 0; p < 20; ++p) {
            const double x = u(rng);
            const double r = x * (1.0 - x) * hyp::F_deriv(n, m, x, 2) +
                             (c - (apb + 1.0) * x) * hyp::F_deriv(n, m, x, 1) -
                             ab * hyp::F(n, m, x);
            const double scale = std::abs(ab * hyp::F(n, m, x)) + 1.0;
            CHECK(std::abs(r) / scale < 1e-6);
        }
    }
}

TEST_CASE("G initial values and endpoint") {
    CHECK(std::abs(hyp::G(0.0)) < 1e-10);
    CHECK(hyp::G_deriv(0.0, 1) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(hyp::G_deriv(0.0, 2) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(hyp::G(1.0) == doctest::Approx(9.0 / 8.0 * hyp::F(4, 5, -0.5)).epsilon(1e-14));
}

TEST_CASE("G derivatives match finite differences") {
    auto g = [](double x) { return hyp::G(x); };
    for (double x : {0.2, 0.5, 0.8}) {
        CHECK(hyp::G_deriv(x, 0) == hyp::G(x));
        CHECK(hyp::G_deriv(x, 1) == doctest::Approx(fd1(g, x, 1e-6)).epsilon(1e-8));
        CHECK(hyp::G_deriv(x, 2) == doctest::Approx(fd2(g, x, 1e-4)).epsilon(1e-6));
        auto g1 = [](double t) { return hyp::G_deriv(t, 1); };
        CHECK(hyp::G_deriv(x, 3) == doctest::Approx(fd2(g1, x, 1e-4)).epsilon(1e-6));
    }
    CHECK_THROWS_AS(hyp::G_deriv(0.5, 4), std::invalid_argument);
}

TEST_CASE("G solves its third-order ODE") {
    for (int p = 0; p < 50; ++p) {
        const double x = static_cast<double>(p) / 49.0, u = 1.0 - x;
        const double r = 4.0 * hyp::G(x) - 7.0 * u * hyp::G_deriv(x, 1) +
                         3.0 * u * u * hyp::G_deriv(x, 2) -
                         (2.0 + u * u * u) / 3.0 * hyp::G_deriv(x, 3);
        CHECK(std::abs(r) < 1e-9 * (1.0 + std::abs(hyp::G_deriv(x, 3))));
    }
}

TEST_CASE("G2 specializations") {
    for (double x : {0.1, 0.5, 0.9})
        CHECK(hyp::G2(x, 1.0) == doctest::Approx(hyp::G(x)).epsilon(1e-12));
    CHECK(std::abs(hyp::G2(0.0, 0.7)) < 1e-12);
    CHECK(hyp::G2(0.4, 0.0) == doctest::Approx(0.32).epsilon(1e-13));
}

TEST_CASE("scriptG values and derivative identity") {
    CHECK(hyp::scriptG(1.0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    for (double x : {0.2, 0.5, 0.8})
        CHECK(hyp::scriptG(x, 1) == doctest::Approx(hyp::G(1.0 - x)).epsilon(1e-12));
}

TEST_CASE("scriptG higher orders agree with finite differences") {
    auto g0 = [](double x) { return hyp::scriptG(x, 0); };
    auto g2 = [](double x) { return hyp::scriptG(x, 2); };
    auto g3 = [](double x) { return hyp::scriptG(x, 3); };
    for (double x : {0.4, 0.7}) {
        CHECK(hyp::scriptG(x, 1) == doctest::Approx(fd1(g0, x, 1e-6)).epsilon(1e-8));
        CHECK(hyp::scriptG(x, 2) == doctest::Approx(fd2(g0, x, 1e-4)).epsilon(1e-6));
        CHECK(hyp::scriptG(x, 3) == doctest::Approx(fd1(g2, x, 1e-5)).epsilon(1e-7));
        CHECK(hyp::scriptG(x, 4) == doctest::Approx(fd1(g3, x, 1e-5)).epsilon(1e-6));
        CHECK(hyp::scriptG(x, 5) == doctest::Approx(fd2(g3, x, 1e-4)).epsilon(1e-4));
    }
    CHECK_THROWS_AS(hyp::scriptG(0.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(hyp::scriptG(0.5, 6), std::invalid_argument);
}

TEST_CASE("basis constants reproduce G") {
    const auto d = hyp::solve_basis_constants();
    // d2 * F21 basis + d1 * (1-x)^2 F45 basis equals G.
    for (double x : {0.0, 0.3, 0.6, 0.9}) {
        const double u = 1.0 - x, w = -u * u * u / 2.0;
        const double combo = d.d2 * hyp::F(2, 1, w) + d.d1 * u * u * hyp::F(4, 5, w);
        CHECK(combo == doctest::Approx(hyp::G(x)).epsilon(1e-12));
    }
    CHECK(d.d1 == doctest::Approx(-9.0 / 8.0 * hyp::F(2, 1, -0.5)).epsilon(1e-12));
    CHECK(d.d2 == doctest::Approx(9.0 / 8.0 * hyp::F(4, 5, -0.5)).epsilon(1e-12));
}
