#include "bs5/hypergeom.hpp"

#include <cmath>
#include <stdexcept>

namespace bs5::hyp {

namespace {

void check_args(int m, double x) {
    if (m <= 0 && m % 3 == 0) throw std::invalid_argument("F: third parameter m/3 is a nonpositive integer");
    if (!(std::abs(x) < 1.0)) throw std::invalid_argument("F: series requires |x| < 1");
}

// sum_s weight(s) * c_s * x^{s-shift}, c_s the series coefficients of F_{n,m}.
template <class Weight>
double sum_series(int n, int m, double x, int shift, Weight weight, const SeriesConfig& cfg) {
    check_args(m, x);
    const double nn = n / 3.0, mm = m / 3.0;
    double c = 1.0, acc = 0.0;
    for (int s = 0; s < cfg.max_terms; ++s) {
        if (s >= shift) {
            double t = weight(s) * c;
            for (int r = 0; r < s - shift; ++r) t *= x;
            acc += t;
            if (s > shift && std::abs(t) <= cfg.rel_tol * std::abs(acc)) return acc;
        }
        c *= ((nn + s) * (nn + s) + 2.0 / 9.0) / ((mm + s) * (1.0 + s));
    }
    throw std::runtime_error("F: series did not converge within max_terms");
}

}  // namespace

double F(int n, int m, double x, const SeriesConfig& cfg) {
    return sum_series(n, m, x, 0, [](int) { return 1.0; }, cfg);
}

double F_deriv(int n, int m, double x, int order, const SeriesConfig& cfg) {
    switch (order) {
        case 1:
            return sum_series(n, m, x, 1, [](int s) { return double(s); }, cfg);
        case 2:
            return sum_series(n, m, x, 2, [](int s) { return double(s) * (s - 1); }, cfg);
        case 3:
            return sum_series(n, m, x, 3, [](int s) { return double(s) * (s - 1) * (s - 2); }, cfg);
        default:
            throw std::invalid_argument("F_deriv: order must be 1..3");
    }
}

namespace {

// Cached F_{2,1}(-1/2) and F_{4,5}(-1/2).
const double kF21h = F(2, 1, -0.5);
const double kF45h = F(4, 5, -0.5);

}  // namespace

double G(double x) {
    const double u = 1.0 - x;
    const double w = -u * u * u / 2.0;
    return 9.0 / 8.0 * (kF45h * F(2, 1, w) - u * u * kF21h * F(4, 5, w));
}

double G_deriv(double x, int order) {
    if (order == 0) return G(x);
    if (order < 0 || order > 3) throw std::invalid_argument("G_deriv: order must be 0..3");
    const double u = 1.0 - x;
    const double w = -u * u * u / 2.0;
    const double w1 = 1.5 * u * u, w2 = -3.0 * u, w3 = 3.0;

    // Derivatives of x -> F_{n,m}(w(x)) up to `order`.
    auto comp = [&](int n, int m, double* d) {
        d[0] = F(n, m, w);
        double f1 = F_deriv(n, m, w, 1);
        d[1] = f1 * w1;
        if (order >= 2) {
            double f2 = F_deriv(n, m, w, 2);
            d[2] = f2 * w1 * w1 + f1 * w2;
            if (order >= 3) {
                double f3 = F_deriv(n, m, w, 3);
                d[3] = f3 * w1 * w1 * w1 + 3.0 * f2 * w1 * w2 + f1 * w3;
            }
        }
    };
    double p[4] = {}, q[4] = {};
    comp(2, 1, p);
    comp(4, 5, q);
    // R = u^2 F_{4,5}(w); (u^2)' = -2u, (u^2)'' = 2.
    double R[4];
    R[0] = u * u * q[0];
    R[1] = -2.0 * u * q[0] + u * u * q[1];
    R[2] = 2.0 * q[0] - 4.0 * u * q[1] + u * u * q[2];
    R[3] = 6.0 * q[1] - 6.0 * u * q[2] + u * u * q[3];
    return 9.0 / 8.0 * (kF45h * p[order] - kF21h * R[order]);
}

double G2(double x, double z) {
    if (z >= 3.0) throw std::invalid_argument("G2: requires z < 3");
    const double u = 1.0 - x;
    const double zeta = z / (z - 3.0);
    const double denom = (3.0 - z) * (3.0 - z);
    return 9.0 / (2.0 * denom) *
           (F(4, 5, zeta) * F(2, 1, u * u * u * zeta) -
            u * u * F(2, 1, zeta) * F(4, 5, u * u * u * zeta));
}

double scriptG(double x, int order) {
    if (order < 0 || order > 5) throw std::invalid_argument("scriptG: order must be 0..5");
    const double y = x;
    const double v = -y * y * y / 2.0;
    const double g0 = 1.5 * kF21h * F(1, 2, v) + 9.0 / 8.0 * y * kF45h * F(2, 4, v);
    if (order == 0) return g0;
    const double v1 = -1.5 * y * y;
    const double g1 = 1.5 * kF21h * F_deriv(1, 2, v, 1) * v1 +
                      9.0 / 8.0 * kF45h * (F(2, 4, v) + y * F_deriv(2, 4, v, 1) * v1);
    if (order == 1) return g1;
    const double y3 = y * y * y;
    const double g2 = -(3.0 * y * g0 + 3.0 * y * y * g1) / (y3 + 2.0);
    if (order == 2) return g2;
    if (y <= 0.0) throw std::invalid_argument("scriptG: orders >= 3 need x > 0");
    const double g3 = -(6.0 * y * y * g1 + (5.0 * y3 - 2.0) * g2) / (y * (y3 + 2.0));
    if (order == 3) return g3;
    const double g4 =
        -((11.0 * y3 + 4.0) * g2 + y * (7.0 * y3 - 4.0) * g3) / (y * y * (y3 + 2.0));
    if (order == 4) return g4;
    return -(18.0 * y * (11.0 * y3 + 16.0) * g3 + 9.0 * y * y * (11.0 * y3 - 2.0) * g4) /
           (11.0 * y3 * y3 + 26.0 * y3 + 8.0);
}

BasisConstants solve_basis_constants() {
    // Basis at x = 0: u1 = F_{2,1}(w), u2 = (1-x)^2 F_{4,5}(w), w = -(1-x)^3/2.
    const double w1_at0 = 1.5;  // dw/dx at x = 0
    const double u1_0 = kF21h;
    const double u1p_0 = F_deriv(2, 1, -0.5, 1) * w1_at0;
    const double u2_0 = kF45h;
    const double u2p_0 = -2.0 * kF45h + F_deriv(4, 5, -0.5, 1) * w1_at0;
    // Solve d2*u1 + d1*u2 = 0, d2*u1' + d1*u2' = 1 at x = 0.
    const double det = u1_0 * u2p_0 - u2_0 * u1p_0;
    return {.d1 = u1_0 / det, .d2 = -u2_0 / det};
}

}  // namespace bs5::hyp
