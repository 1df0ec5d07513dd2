#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace bs5::ode {

// Coefficients c_0..c_5 of the fifth-order linear ODE
//   sum_j c_j(y) B1^{(j)}(y) = 0
// in simplified form, built from scriptG(y, 0..1). c_1 = -y c_0 by
// construction; c_5(1) = -3.
std::array<double, 6> coefficients(double y);

// The same coefficients in their raw, unsimplified form, built from
// scriptG(y, 0..5). Used only as a cross-check oracle for coefficients().
std::array<double, 6> coefficients_raw(double y);

struct SolverConfig {
    double y_min = 1e-3;
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_step = 0.00125;
    double initial_step = 1e-3;
    double c5_floor = 1e-12;  // singularity guard, relative to local scale
};

struct SolverDiagnostics {
    int accepted_steps = 0;
    int rejected_steps = 0;
    double min_abs_c5 = 0.0;
    double c5_sign = 0.0;  // observed sign of c5 on the domain
};

using State = std::array<double, 5>;  // (B1, B1', B1'', B1''', B1'''')

// Densely evaluable solution on [y_min, 1]. Components 0..3 are interpolated
// with two-point quintic Hermite polynomials (their first and second
// derivatives are neighboring state components), component 4 with cubic
// Hermite using the ODE right-hand side as its derivative.
class DenseSolution {
  public:
    double y_min() const { return y_min_; }

    // B1^{(order)}(y), order 0..4. y in [y_min, 1]; values below y_min are
    // refused unless `allow_extrapolation`, in which case the lowest step
    // polynomial is extended.
    double eval(double y, int order, bool allow_extrapolation = false) const;

    // B1^{(5)}(y) as the derivative of the interpolant of component 4.
    double fifth_derivative(double y) const;

    const SolverDiagnostics& diagnostics() const { return diag_; }

  private:
    friend DenseSolution solve(const SolverConfig&, const State&, double);

    struct Step {
        double a, b;                      // a > b (downward integration)
        State ua, ub;                     // states at the endpoints
        std::array<double, 5> fa, fb;     // derivatives (RHS) at the endpoints
    };

    std::size_t find_step(double y) const;

    std::vector<Step> steps_;  // ordered from y=1 down to y_min
    double y_min_ = 0.0;
    SolverDiagnostics diag_;
};

// Integrates the ODE from y_start down to cfg.y_min with an adaptive
// Dormand-Prince 5(4) pair, starting from the boundary state at y_start
// (by default the y=1 boundary values of the solution).
DenseSolution solve(const SolverConfig& cfg = {},
                    const State& bc = {0.2, 0.0, -0.2, 1.0, -3.6},
                    double y_start = 1.0);

}  // namespace bs5::ode
