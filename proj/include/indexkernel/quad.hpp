#pragma once

// Quadrature engine: double-exponential rules for finite and semi-infinite
// integrals, adaptive Gauss-Kronrod bisection, and truncated vertical-line
// (Mellin-Barnes) integration with a certified tail residual.

#include "indexkernel/common.hpp"

#include <functional>

namespace ik::quad {

struct QuadratureResult {
    Cplx value{0.0, 0.0};
    double abs_error_estimate = 0.0;
    long evaluations = 0;

    double real() const { return value.real(); }
};

// Vertical line Re s = sigma truncated at |Im s| = t_cap; the integrand is
// assumed to decay like |t|^poly_power * exp(-decay_rate*|t|) beyond t_cap.
struct LineSpec {
    double sigma = 1.0;
    double t_cap = 40.0;
    double decay_rate = num::pi / 2.0;
    double poly_power = 2.0;
};

// Integral over (0, inf) by the exp-sinh double-exponential rule with level
// doubling; admits power singularities of exponent > -1 at 0. tol is
// relative to the integral scale; abs_tol is an additional absolute floor
// below which refinement stops.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f, double tol,
                                         double abs_tol = 0.0);
QuadratureResult integrate_semi_infinite_cx(const std::function<Cplx(double)>& f, double tol,
                                            double abs_tol = 0.0);

// Integral over [a, b] by tanh-sinh; admits integrable endpoint
// singularities (f is never evaluated at the endpoints). Abscissas approach
// an endpoint only to within its relative rounding, so a power singularity
// resolves to full accuracy when its endpoint is 0.
QuadratureResult tanh_sinh_finite(const std::function<double(double)>& f, double a, double b,
                                  double tol, double abs_tol = 0.0);

// Integral over [a, b] by adaptive Gauss-Kronrod 15(7) bisection.
QuadratureResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                                  double tol, double abs_tol = 0.0);
QuadratureResult integrate_finite_cx(const std::function<Cplx(double)>& f, double a, double b,
                                     double tol, double abs_tol = 0.0);

// (1/2pi) Int_{-t_cap}^{t_cap} f(sigma + i t) dt plus a certified bound on
// the discarded tail, added into abs_error_estimate. Throws NumericalError
// if the sampled tail is not decreasing (decay-model violation).
QuadratureResult integrate_line(const std::function<Cplx(Cplx)>& f, const LineSpec& spec,
                                double tol, double abs_tol = 0.0);

// Smallest t with t^p exp(-rate*t) <= target (for building LineSpec.t_cap).
double solve_t_cap(double poly_power, double decay_rate, double target);

} // namespace ik::quad
