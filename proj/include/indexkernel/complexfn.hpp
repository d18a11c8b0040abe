#pragma once

// Scalar special functions on real and complex arguments: Gamma and
// log-Gamma, |Gamma|^2 weights, erfc, E1, 1F1, 2F1(.,.;.;z<=0).

#include "indexkernel/common.hpp"

namespace ik::complexfn {

// |Gamma(base + i tau)|^2, kept with its parameters for reporting.
struct GammaModulusSq {
    double base = 0.0;
    double tau = 0.0;
    double value = 0.0;
};

// Gamma(z) by Lanczos approximation, reflection for Re z < 0.5.
// Relative error <= ~1e-13 for |Im z| <= 50, 0.1 <= |z| <= 50.
// Throws DomainError at nonpositive integers, NumericalError on overflow.
Cplx gamma(Cplx z);

// log Gamma(z); imaginary part is exact only modulo 2*pi (callers only ever
// exponentiate sums of these, where the ambiguity cancels).
Cplx log_gamma(Cplx z);

double gamma_real(double x);
double log_gamma_real(double x); // x > 0

// 1/Gamma(x); exactly 0 at nonpositive integers (entire function).
double rgamma_real(double x);

// |Gamma(a + i tau)|^2 computed in log space; even in tau.
double gamma_modulus_sq(double a, double tau);
GammaModulusSq gamma_modulus_sq_detail(double a, double tau);

// Complementary error function (2/sqrt(pi)) Int_x^inf exp(-t^2) dt.
double erfc(double x);

// Scaled complement exp(x^2) erfc(x), x >= 0; no over/underflow for large x.
double erfcx(double x);

// Exponential integral E1(x) = Int_x^inf exp(-t)/t dt, x > 0.
double exp_integral_e1(double x);

// Kummer confluent 1F1(a; c; x) by series, Kahan-compensated. |x| <= 100.
Cplx hyp1f1(Cplx a, Cplx c, double x);

// Gauss 2F1(a, b; c; z) for real z <= 0: series on (-1, 0], Pfaff
// transformation z -> z/(z-1) for z < -1.
Cplx hyp2f1(Cplx a, Cplx b, Cplx c, double z);

// 2F1(mu + i tau, mu - i tau; nu; z) for real z <= 0 -- real by conjugate
// symmetry; the small spurious imaginary part is checked and dropped.
double hyp2f1_conj_pair(double mu, double tau, double nu, double z);

} // namespace ik::complexfn
