#include "bs5/ode5.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bs5/hypergeom.hpp"

namespace bs5::ode {

std::array<double, 6> coefficients(double y) {
    const double g0 = hyp::scriptG(y, 0);
    const double g1 = hyp::scriptG(y, 1);
    const double y2 = y * y, y3 = y * y2, y6 = y3 * y3;
    const double c0 =
        18.0 * y2 * y2 / ((y3 + 2.0) * (y3 + 2.0)) *
        (y * (y3 - 22.0) * g1 + (5.0 * y3 - 14.0) * g0);
    return {
        c0,
        -y * c0,
        6.0 / (y3 + 2.0) *
            (y * (3.0 * y6 - 38.0 * y3 - 4.0) * g1 + (15.0 * y6 - 10.0 * y3 + 4.0) * g0),
        -12.0 * y * (y * (4.0 * y3 - 1.0) * g1 + (5.0 * y3 + 1.0) * g0),
        -3.0 * y2 * (y * (y3 + 2.0) * g1 + (9.0 * y3 - 2.0) * g0),
        y3 * (y3 + 2.0) * (y * g1 - g0),
    };
}

std::array<double, 6> coefficients_raw(double y) {
    double g[6];
    for (int r = 0; r < 6; ++r) g[r] = hyp::scriptG(y, r);
    const double y2 = y * y, y3 = y * y2, y6 = y3 * y3;
    return {
        6.0 * (5.0 * y3 - 2.0) * g[2] + 6.0 * y * (5.0 * y3 + 2.0) * g[3] +
            y2 * (9.0 * y3 - 6.0) * g[4] + y3 * (y3 + 2.0) * g[5],
        3.0 * y * ((y3 + 4.0) * g[2] + y * (3.0 * y3 - 4.0) * g[3] + y2 * (y3 + 2.0) * g[4]),
        6.0 * (2.0 - 5.0 * y3) * g[0] - 6.0 * y * (13.0 * y3 + 2.0) * g[1] -
            9.0 * y3 * y2 * g[2] +
            y3 * ((11.0 * y3 + 4.0) * g[3] + (y3 + 2.0) * y * g[4]),
        y * (-3.0 * (19.0 * y3 + 4.0) * g[0] + 3.0 * y * (4.0 - 9.0 * y3) * g[1] +
             4.0 * y2 * (4.0 * y3 - 1.0) * g[2] + 3.0 * y3 * (y3 + 2.0) * g[3]),
        3.0 * y2 * ((2.0 - 6.0 * y3) * g[0] + 2.0 * y * (y3 - 1.0) * g[1] +
                    y2 * (y3 + 2.0) * g[2]),
        y3 * (y3 + 2.0) * (-g[0] + y * g[1]),
    };
}

namespace {

std::array<double, 5> rhs(double y, const State& u, double c5_floor) {
    const auto c = coefficients(y);
    double scale = 0.0;
    for (double cj : c) scale = std::max(scale, std::abs(cj));
    if (std::abs(c[5]) < c5_floor * scale)
        throw std::runtime_error("ode5: leading coefficient c5 vanished at y = " +
                                 std::to_string(y));
    double s = 0.0;
    for (int j = 0; j < 5; ++j) s += c[j] * u[j];
    return {u[1], u[2], u[3], u[4], -s / c[5]};
}

// Two-point quintic Hermite through (value, 1st, 2nd derivative) at a and b,
// in Newton form on the confluent nodes (a,a,a,b,b,b).
double quintic(double a, double b, double v0, double d0, double s0, double v1, double d1,
               double s1, double y) {
    const double h = b - a;
    const double faa = d0, faaa = s0 / 2.0;
    const double fab = (v1 - v0) / h;
    const double fbb = d1, fbbb = s1 / 2.0;
    const double faab = (fab - faa) / h;
    const double fabb = (fbb - fab) / h;
    const double faaab = (faab - faaa) / h;
    const double faabb = (fabb - faab) / h;
    const double fabbb = (fbbb - fabb) / h;
    const double faaabb = (faabb - faaab) / h;
    const double faabbb = (fabbb - faabb) / h;
    const double faaabbb = (faabbb - faaabb) / h;
    const double ta = y - a, tb = y - b;
    double p = faaabbb;
    p = p * tb + faaabb;
    p = p * tb + faaab;
    p = p * ta + faaa;
    p = p * ta + faa;
    p = p * ta + v0;
    return p;
}

double cubic(double a, double b, double v0, double d0, double v1, double d1, double y) {
    const double h = b - a, t = (y - a) / h;
    const double t2 = t * t, t3 = t2 * t;
    return (2.0 * t3 - 3.0 * t2 + 1.0) * v0 + (t3 - 2.0 * t2 + t) * h * d0 +
           (-2.0 * t3 + 3.0 * t2) * v1 + (t3 - t2) * h * d1;
}

double cubic_deriv(double a, double b, double v0, double d0, double v1, double d1, double y) {
    const double h = b - a, t = (y - a) / h;
    const double t2 = t * t;
    return ((6.0 * t2 - 6.0 * t) * v0 / h + (3.0 * t2 - 4.0 * t + 1.0) * d0 +
            (-6.0 * t2 + 6.0 * t) * v1 / h + (3.0 * t2 - 2.0 * t) * d1);
}

}  // namespace

std::size_t DenseSolution::find_step(double y) const {
    // steps_ ordered by decreasing y: steps_[0].a == 1.
    auto it = std::lower_bound(steps_.begin(), steps_.end(), y,
                               [](const Step& s, double yy) { return s.b > yy; });
    if (it == steps_.end()) it = std::prev(it);
    return static_cast<std::size_t>(it - steps_.begin());
}

double DenseSolution::eval(double y, int order, bool allow_extrapolation) const {
    if (order < 0 || order > 4) throw std::invalid_argument("eval: order must be 0..4");
    if (y > 1.0 + 1e-12) throw std::domain_error("eval: y above 1");
    if (y < y_min_ - 1e-12 && !allow_extrapolation)
        throw std::domain_error("eval: y below y_min (pass allow_extrapolation to extend)");
    y = std::min(y, 1.0);
    const Step& s = steps_[find_step(std::max(y, y_min_))];
    if (order == 4) return cubic(s.a, s.b, s.ua[4], s.fa[4], s.ub[4], s.fb[4], y);
    const double s0 = order <= 2 ? s.ua[order + 2] : s.fa[4];
    const double s1 = order <= 2 ? s.ub[order + 2] : s.fb[4];
    return quintic(s.a, s.b, s.ua[order], s.ua[order + 1], s0, s.ub[order], s.ub[order + 1],
                   s1, y);
}

double DenseSolution::fifth_derivative(double y) const {
    const Step& s = steps_[find_step(std::max(y, y_min_))];
    return cubic_deriv(s.a, s.b, s.ua[4], s.fa[4], s.ub[4], s.fb[4], y);
}

DenseSolution solve(const SolverConfig& cfg, const State& bc, double y_start) {
    if (!(cfg.y_min > 0.0 && cfg.y_min < 1.0))
        throw std::invalid_argument("solve: y_min must lie in (0,1)");
    if (!(y_start > cfg.y_min && y_start <= 1.0))
        throw std::invalid_argument("solve: y_start must lie in (y_min, 1]");

    // Dormand-Prince 5(4) tableau.
    static const double A[7][6] = {
        {},
        {1.0 / 5},
        {3.0 / 40, 9.0 / 40},
        {44.0 / 45, -56.0 / 15, 32.0 / 9},
        {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
        {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
        {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
    };
    static const double C[7] = {0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
    static const double E[7] = {35.0 / 384 - 5179.0 / 57600,
                                0.0,
                                500.0 / 1113 - 7571.0 / 16695,
                                125.0 / 192 - 393.0 / 640,
                                -2187.0 / 6784 + 92097.0 / 339200,
                                11.0 / 84 - 187.0 / 2100,
                                -1.0 / 40};

    DenseSolution sol;
    sol.y_min_ = cfg.y_min;
    auto& diag = sol.diag_;
    diag.min_abs_c5 = std::abs(coefficients(y_start)[5]);
    diag.c5_sign = coefficients(y_start)[5] < 0 ? -1.0 : 1.0;

    double t = y_start;
    State u = bc;
    std::array<double, 5> k[7];
    k[0] = rhs(t, u, cfg.c5_floor);
    double h = -std::min(cfg.initial_step, cfg.max_step);

    while (t > cfg.y_min) {
        if (t + h < cfg.y_min) h = cfg.y_min - t;
        if (std::abs(h) < 1e-14)
            throw std::runtime_error("ode5: step size underflow at y = " + std::to_string(t));

        State stage;
        for (int s = 1; s < 7; ++s) {
            for (int d = 0; d < 5; ++d) {
                double acc = 0.0;
                for (int q = 0; q < s; ++q) acc += A[s][q] * k[q][d];
                stage[d] = u[d] + h * acc;
            }
            k[s] = rhs(t + C[s] * h, stage, cfg.c5_floor);
        }
        State unew = stage;  // stage 6 used the 5th-order weights (FSAL)

        double err = 0.0;
        for (int d = 0; d < 5; ++d) {
            double e = 0.0;
            for (int q = 0; q < 7; ++q) e += E[q] * k[q][d];
            e *= h;
            const double sc = cfg.abs_tol + cfg.rel_tol * std::max(std::abs(u[d]), std::abs(unew[d]));
            err += (e / sc) * (e / sc);
        }
        err = std::sqrt(err / 5.0);

        if (err <= 1.0) {
            sol.steps_.push_back({t, t + h, u, unew, k[0], k[6]});
            const double c5 = coefficients(t + h)[5];
            diag.min_abs_c5 = std::min(diag.min_abs_c5, std::abs(c5));
            ++diag.accepted_steps;
            t += h;
            u = unew;
            k[0] = k[6];
        } else {
            ++diag.rejected_steps;
        }
        double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
        fac = std::clamp(fac, 0.2, 5.0);
        h *= fac;
        if (std::abs(h) > cfg.max_step) h = -cfg.max_step;
    }
    return sol;
}

}  // namespace bs5::ode
