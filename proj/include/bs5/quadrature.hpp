#pragma once

#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace bs5::quad {

struct QuadConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_depth = 30;
};

namespace detail {

// Gauss-Kronrod 7-15 pair on [-1, 1].
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double kWk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class Fn>
void gk15(const Fn& f, double a, double b, double& result, double& err) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double resk = 0.0, resg = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double v = i == 7 ? f(c) : f(c - h * kXgk[i]) + f(c + h * kXgk[i]);
        resk += kWk[i] * v;
        if (i % 2 == 1) resg += kWg[i / 2] * v;
    }
    result = resk * h;
    err = std::abs((resk - resg) * h);
}

template <class Fn>
double adapt(const Fn& f, double a, double b, double tol, int depth, const QuadConfig& cfg) {
    double r, e;
    gk15(f, a, b, r, e);
    if (e <= tol || e <= cfg.rel_tol * std::abs(r)) return r;
    if (depth >= cfg.max_depth)
        throw std::runtime_error("quadrature: max subdivision depth reached");
    const double m = 0.5 * (a + b);
    return adapt(f, a, m, 0.5 * tol, depth + 1, cfg) +
           adapt(f, m, b, 0.5 * tol, depth + 1, cfg);
}

}  // namespace detail

// Adaptive Gauss-Kronrod integration of f over [a, b].
template <class Fn>
double integrate(const Fn& f, double a, double b, const QuadConfig& cfg = {}) {
    if (a == b) return 0.0;
    return detail::adapt(f, a, b, cfg.abs_tol, 0, cfg);
}

}  // namespace bs5::quad
