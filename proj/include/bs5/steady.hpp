#pragma once

#include <array>

#include "bs5/ode5.hpp"
#include "bs5/quadrature.hpp"

namespace bs5::steady {

// Steady-state density model assembled from the solved fifth-order ODE.
// Immutable after construction; all evaluations are pure.
class SteadyModel {
  public:
    explicit SteadyModel(ode::SolverConfig ode_cfg = {}, quad::QuadConfig quad_cfg = {});

    const ode::DenseSolution& solution() const { return sol_; }
    double y_min() const { return sol_.y_min(); }

    // True when evaluation at x relies on extrapolating B1 below y_min.
    bool is_extrapolated(double x) const { return x > 1.0 - sol_.y_min(); }

    // B_{o,0}(x) = int_{1-x}^1 (1/xi) [scriptG''(xi) B1(xi) - scriptG(xi) B1''(xi)] dxi.
    double b_circ_0(double x) const;

    // q(x,y) = scriptG'(1-x) B1'(1-y) + B_{o,0}(x) = G(x) B1'(1-y) + B_{o,0}(x),
    // for ordered pairs x <= y.
    double q_steady(double x, double y) const;

    // Joint steady-state density: sum over the 5 cyclic neighbor pairs of
    // q(min, max).
    double joint_density(const std::array<double, 5>& f) const;

    // Marginal density 3/5 + 2 B1'(1-x) and its exact antiderivative
    // 3x/5 + 2 (B1(1) - B1(1-x)).
    double marginal_pdf(double x) const;
    double marginal_cdf(double x) const;

    // B1 extrapolated to y=0, used by marginal_cdf near x=1.
    double b1_at_zero() const { return b1_zero_; }

  private:
    ode::DenseSolution sol_;
    quad::QuadConfig quad_cfg_;
    double b1_zero_;
};

// Conjectured infinite-N limit: uniform law on [2/3, 1].
double conjectured_cdf(double x);

}  // namespace bs5::steady
