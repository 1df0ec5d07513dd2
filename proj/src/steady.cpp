#include "bs5/steady.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bs5/hypergeom.hpp"

namespace bs5::steady {

SteadyModel::SteadyModel(ode::SolverConfig ode_cfg, quad::QuadConfig quad_cfg)
    : sol_(ode::solve(ode_cfg)), quad_cfg_(quad_cfg) {
    b1_zero_ = sol_.eval(0.0, 0, /*allow_extrapolation=*/true);
}

double SteadyModel::b_circ_0(double x) const {
    if (x < 0.0 || x > 1.0) throw std::domain_error("b_circ_0: x outside [0,1]");
    if (x == 0.0) return 0.0;
    const double lo = std::max(1.0 - x, sol_.y_min());
    auto integrand = [this](double xi) {
        return (hyp::scriptG(xi, 2) * sol_.eval(xi, 0) - hyp::scriptG(xi, 0) * sol_.eval(xi, 2)) /
               xi;
    };
    return quad::integrate(integrand, lo, 1.0, quad_cfg_);
}

double SteadyModel::q_steady(double x, double y) const {
    if (!(x <= y)) throw std::domain_error("q_steady: requires x <= y");
    const double b1p = sol_.eval(1.0 - y, 1, /*allow_extrapolation=*/true);
    return hyp::G(x) * b1p + b_circ_0(x);
}

double SteadyModel::joint_density(const std::array<double, 5>& f) const {
    double s = 0.0;
    for (int nu = 0; nu < 5; ++nu) {
        const double a = f[nu], b = f[(nu + 1) % 5];
        s += q_steady(std::min(a, b), std::max(a, b));
    }
    return s;
}

double SteadyModel::marginal_pdf(double x) const {
    if (x < 0.0 || x > 1.0) throw std::domain_error("marginal_pdf: x outside [0,1]");
    return 0.6 + 2.0 * sol_.eval(1.0 - x, 1, /*allow_extrapolation=*/true);
}

double SteadyModel::marginal_cdf(double x) const {
    if (x < 0.0 || x > 1.0) throw std::domain_error("marginal_cdf: x outside [0,1]");
    const double b1 = sol_.eval(1.0 - x, 0, /*allow_extrapolation=*/true);
    return 0.6 * x + 2.0 * (0.2 - b1);
}

double conjectured_cdf(double x) {
    if (x < 0.0 || x > 1.0) throw std::domain_error("conjectured_cdf: x outside [0,1]");
    return x < 2.0 / 3.0 ? 0.0 : 3.0 * x - 2.0;
}

}  // namespace bs5::steady
