#pragma once

#include <functional>

namespace rsa::specfun {

inline constexpr double euler_gamma = 0.57721566490153286061;

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool max_depth_reached = false;
};

using RealFn = std::function<double(double)>;

// Ein(z) = int_0^z (1 - e^{-t}) / t dt.
double ein(double z);

// E1(z) for z > 0.
double expint_e1(double z);

double log_beta(double z1, double z2);

// Adaptive Simpson on [a, b] with absolute tolerance `tol`.
QuadratureResult integrate(const RealFn& f, double a, double b, double tol, int max_depth = 50);

// int_0^inf f, truncated at the first T (doubling from T0) where tail_bound(T) <= tol/2.
QuadratureResult integrate_semi_infinite(const RealFn& f, double tol, const RealFn& tail_bound,
                                         double T0 = 1.0, int max_doublings = 200);

// Bracketed root with final bracket width <= tol.
double find_root(const RealFn& f, double lo, double hi, double tol);

}  // namespace rsa::specfun
