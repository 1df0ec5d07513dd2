#pragma once

namespace bs5::hyp {

struct SeriesConfig {
    double rel_tol = 1e-14;
    int max_terms = 10000;
};

// F_{n,m}(x): the Gauss hypergeometric function with the conjugate parameter
// pair (n +- i*sqrt(2))/3 and third parameter m/3. Real for real x; every
// series term is real because (a+s)(b+s) = (n/3+s)^2 + 2/9.
// Requires |x| < 1 and m not in {0, -3, -6, ...}.
double F(int n, int m, double x, const SeriesConfig& cfg = {});

// order-th derivative (order 1..3) of x -> F_{n,m}(x), termwise.
double F_deriv(int n, int m, double x, int order, const SeriesConfig& cfg = {});

// G(x) = (9/8) [ F_{4,5}{-1/2} F_{2,1}{w} - (1-x)^2 F_{2,1}{-1/2} F_{4,5}{w} ],
// w = -(1-x)^3/2. Generating function of beta_{i,j}/beta_{1,j} for j >= 1;
// G(0)=0, G'(0)=G''(0)=1.
double G(double x);

// Derivatives of G up to order 3 (analytic, via the chain rule through w).
double G_deriv(double x, int order);

// Two-variable extension; G2(x,1) = G(x).
double G2(double x, double z);

// scriptG(x) = 1 - int_0^{1-x} G and its derivatives, order 0..5.
// Order 0 and 1 are summed termwise; order 2 uses
//   scriptG'' = -[3y scriptG + 3y^2 scriptG'] / (y^3 + 2),
// orders 3..5 the companion relations solved for the highest derivative.
// Orders >= 3 require x > 0.
double scriptG(double x, int order);

// The two constants multiplying the basis solutions of the third-order
// generating-function ODE, determined by G(0)=0, G'(0)=1 from a 2x2 solve.
struct BasisConstants {
    double d1;  // multiplies (1-x)^2 F_{4,5}{-(1-x)^3/2}
    double d2;  // multiplies F_{2,1}{-(1-x)^3/2}
};
BasisConstants solve_basis_constants();

}  // namespace bs5::hyp
