#pragma once

// Index-transform kernels: Macdonald K_{sigma+i tau}(x), Whittaker
// W_{mu, i tau}(x), parabolic cylinder D_mu(z), Lommel S_{mu, i tau}(x).
// Each kernel has a primary representation and an independent cross-check
// representation; the identity registry picks routes explicitly so the two
// sides of an identity never share one.

#include "indexkernel/common.hpp"

namespace ik::kernels {

struct EvalPoint {
    double mu = 0.0;  // first Whittaker index
    double tau = 0.0; // imaginary second-index magnitude
    double x = 1.0;   // argument, > 0
};

struct BoundParams {
    double delta = num::pi / 3.0; // in [0, pi/2)
};

struct KernelValue {
    double value = 0.0;
    double abs_error = 0.0;
    const char* route = "";
    bool underflowed = false;
    bool flagged = false; // near-pole fallback was used
};

// --- Macdonald ------------------------------------------------------------

// K_{i tau}(x), real and even in tau. Cosine integral (Schlafli) with the
// cosh cutoff for moderate (tau, x); ascending series where the cosine
// integral cancels below binary64 (small x or tau >> x).
double macdonald_imag(double tau, double x);
KernelValue macdonald_imag_detail(double tau, double x, double tol = 1e-12);

// K_{nu}(x) for real nu >= 0 via the cosh-kernel integral.
double macdonald_real_order(double nu, double x);

// K_{sigma + i tau}(x) via the Laplace convolution representation
// K_nu(x) = (1/2)(x/2)^nu Int_0^inf exp(-u - x^2/4u) u^{-nu-1} du.
Cplx macdonald_complex_order(double sigma, double tau, double x);

// Uniform bound e^{-delta |tau|} K_0(x cos delta), delta in [0, pi/2).
double macdonald_uniform_bound(double tau, double x, double delta);

// --- Whittaker ------------------------------------------------------------

enum class WhittakerRoute { fourier_inversion, mellin_barnes };

// W_{mu, i tau}(x) through one named route.
KernelValue whittaker_route(double mu, double tau, double x, WhittakerRoute route,
                            double rel_tol = 1e-11, double abs_tol = 0.0);

// W_{mu, i tau}(x); primary Fourier-inversion route cross-checked against
// the Mellin-Barnes line for tau <= 6 (beyond that the inversion integral
// cancels below binary64 and the line integral is used alone). Throws
// NumericalError if the two routes disagree by more than 1e-7 relative.
double whittaker_imag(const EvalPoint& p);
KernelValue whittaker_imag_detail(const EvalPoint& p);

// W_{mu, nu}(x) for real second index via the Tricomi combination of
// Kummer functions; switches to the Laplace-type integral near the
// removable Gamma singularities at 2 nu integer and for large x.
double whittaker_real_second_index(double mu, double nu, double x);
KernelValue whittaker_real_second_index_detail(double mu, double nu, double x);

// --- Parabolic cylinder ----------------------------------------------------

// Scaled function exp(z^2/4) D_order(z), z > 0: order <= 0 by the Laplace
// integral, order > 0 by the Kummer pair (small z^2/2) or upward recurrence
// from the integral route. Safe from under/overflow for any z > 0.
double parabolic_d_scaled(double order, double z);

// D_order(z) = exp(-z^2/4) * parabolic_d_scaled; cross-checks the integral
// route against the Kummer pair for order < 0 where both are accurate.
double parabolic_d(double order, double z);
KernelValue parabolic_d_detail(double order, double z);

// --- Lommel -----------------------------------------------------------------

// |Gamma((1-mu+i tau)/2)|^2 S_{mu, i tau}(x) via the Widder transform
// (2x)^{mu+1} Int_0^inf u^{-mu}/(u^2+x^2) K_{i tau}(u) du, mu < 1.
double lommel_weighted(double mu, double tau, double x);

// S_{mu-1/2, 1/2}(x) = x^{mu+1/2} / Gamma(1-mu) Int_0^inf u^{-mu} e^{-u}/(u^2+x^2) du.
double lommel_half(double mu, double x);

} // namespace ik::kernels
