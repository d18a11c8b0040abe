#include "indexkernel/complexfn.hpp"

#include <cmath>
#include <cstdlib>

namespace ik::complexfn {

namespace {

// Lanczos coefficients, g = 607/128, n = 15 (Godfrey's table; same set as
// the widely circulated Matlab-derived implementations). Valid to ~1e-15
// for Re z >= 0.5 before roundoff.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

constexpr double kLog2Pi = 1.8378770664093454836; // log(2*pi)

bool is_nonpositive_integer(double x)
{
    return x <= 0.0 && x == std::floor(x);
}

bool is_nonpositive_integer(Cplx z)
{
    return z.imag() == 0.0 && is_nonpositive_integer(z.real());
}

Cplx lanczos_sum(Cplx z)
{
    // z with Re z >= 0.5; series in 1/(z-1+k)
    Cplx s(kLanczos[0], 0.0);
    for (int k = 1; k < 15; ++k)
        s += kLanczos[k] / (z + Cplx(k - 1.0, 0.0));
    return s;
}

// log Gamma for Re z >= 0.5.
Cplx log_gamma_right(Cplx z)
{
    Cplx base = z + Cplx(kLanczosG - 0.5, 0.0);
    return 0.5 * kLog2Pi + (z - 0.5) * std::log(base) - base + std::log(lanczos_sum(z));
}

// log(sin(pi z)) without overflow for large |Im z|; imaginary part modulo 2*pi.
Cplx log_sin_pi(Cplx z)
{
    const Cplx ipi(0.0, num::pi);
    if (z.imag() >= 0.0) {
        // sin(pi z) = -exp(-i pi z) (1 - exp(2 i pi z)) / (2 i)
        Cplx r = std::exp(2.0 * ipi * z); // |r| = exp(-2 pi Im z) <= 1
        return -ipi * z + std::log(1.0 - r) - Cplx(std::log(2.0), num::pi / 2.0) + Cplx(0.0, num::pi);
    }
    Cplx r = std::exp(-2.0 * ipi * z);
    return ipi * z + std::log(1.0 - r) - Cplx(std::log(2.0), num::pi / 2.0);
}

} // namespace

Cplx log_gamma(Cplx z)
{
    if (is_nonpositive_integer(z))
        throw DomainError("gamma: pole at nonpositive integer z = " + std::to_string(z.real()));
    if (z.real() >= 0.5)
        return log_gamma_right(z);
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(num::pi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

Cplx gamma(Cplx z)
{
    Cplx lg = log_gamma(z);
    if (lg.real() > num::exp_overflow)
        throw NumericalError("gamma: |Gamma(z)| overflows binary64");
    return std::exp(lg);
}

double gamma_real(double x)
{
    if (is_nonpositive_integer(x))
        throw DomainError("gamma: pole at nonpositive integer x = " + std::to_string(x));
    if (x > 0.0) {
        double lg = std::lgamma(x);
        if (lg > num::exp_overflow)
            throw NumericalError("gamma: overflow");
        return std::exp(lg);
    }
    return gamma(Cplx(x, 0.0)).real();
}

double log_gamma_real(double x)
{
    if (x <= 0.0)
        throw DomainError("log_gamma_real: requires x > 0");
    return std::lgamma(x);
}

double rgamma_real(double x)
{
    if (is_nonpositive_integer(x))
        return 0.0;
    if (x > 0.0)
        return std::exp(-std::lgamma(x));
    // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
    double lg = std::lgamma(1.0 - x);
    if (lg > num::exp_overflow)
        return 0.0; // 1/Gamma underflows
    return std::sin(num::pi * x) * std::exp(lg) / num::pi;
}

double gamma_modulus_sq(double a, double tau)
{
    if (tau == 0.0 && is_nonpositive_integer(a))
        throw DomainError("gamma_modulus_sq: pole at nonpositive integer a");
    double re_lg = log_gamma(Cplx(a, std::fabs(tau))).real();
    if (2.0 * re_lg > num::exp_overflow)
        throw NumericalError("gamma_modulus_sq: overflow");
    return std::exp(2.0 * re_lg);
}

GammaModulusSq gamma_modulus_sq_detail(double a, double tau)
{
    return GammaModulusSq{a, tau, gamma_modulus_sq(a, tau)};
}

double erfc(double x)
{
    return std::erfc(x);
}

double erfcx(double x)
{
    if (x < 0.0)
        throw DomainError("erfcx: requires x >= 0");
    if (x < 25.0)
        return std::exp(x * x) * std::erfc(x);
    // Laplace continued fraction: sqrt(pi) erfcx(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
    double cf = 0.0;
    for (int k = 24; k >= 1; --k)
        cf = (0.5 * k) / (x + cf);
    return 1.0 / (num::sqrt_pi * (x + cf));
}

double exp_integral_e1(double x)
{
    if (!(x > 0.0))
        throw DomainError("exp_integral_e1: requires x > 0");
    return -std::expint(-x); // E1(x) = -Ei(-x)
}

Cplx hyp1f1(Cplx a, Cplx c, double x)
{
    if (is_nonpositive_integer(c))
        throw DomainError("hyp1f1: c is a nonpositive integer");
    if (std::fabs(x) > 100.0)
        throw NumericalError("hyp1f1: |x| > 100 outside supported range");
    Cplx sum(1.0, 0.0), comp(0.0, 0.0), term(1.0, 0.0);
    const int kmax = 5000;
    for (int k = 0; k < kmax; ++k) {
        term *= (a + Cplx(k, 0.0)) / ((c + Cplx(k, 0.0)) * (k + 1.0)) * x;
        // Kahan-compensated accumulation
        Cplx y = term - comp;
        Cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::abs(term) <= 1e-18 * (std::abs(sum) + 1e-300) && k > std::fabs(x))
            return sum;
    }
    throw NumericalError("hyp1f1: series did not converge");
}

namespace {

Cplx hyp2f1_series(Cplx a, Cplx b, Cplx c, double z)
{
    // |z| < 1
    Cplx sum(1.0, 0.0), comp(0.0, 0.0), term(1.0, 0.0);
    const int kmax = 40000;
    int small_count = 0;
    for (int k = 0; k < kmax; ++k) {
        term *= (a + Cplx(k, 0.0)) * (b + Cplx(k, 0.0)) / ((c + Cplx(k, 0.0)) * (k + 1.0)) * z;
        Cplx y = term - comp;
        Cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::abs(term) <= 1e-18 * (std::abs(sum) + 1e-300)) {
            if (++small_count >= 2)
                return sum;
        } else {
            small_count = 0;
        }
    }
    throw NumericalError("hyp2f1: series did not converge");
}

} // namespace

Cplx hyp2f1(Cplx a, Cplx b, Cplx c, double z)
{
    if (is_nonpositive_integer(c))
        throw DomainError("hyp2f1: c is a nonpositive integer");
    if (z > 0.0)
        throw DomainError("hyp2f1: requires z <= 0");
    if (z == 0.0)
        return Cplx(1.0, 0.0);
    if (z > -1.0)
        return hyp2f1_series(a, b, c, z);
    // Pfaff: 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)); w in (0,1)
    double w = z / (z - 1.0);
    Cplx pref = std::exp(-a * std::log1p(-z));
    return pref * hyp2f1_series(a, c - b, c, w);
}

double hyp2f1_conj_pair(double mu, double tau, double nu, double z)
{
    // Real by conjugate symmetry; on (-1, 0] the series is real term by
    // term, under the Pfaff route the imaginary residue is roundoff from
    // the transient term growth and Re() is the symmetrized value.
    Cplx v = hyp2f1(Cplx(mu, tau), Cplx(mu, -tau), Cplx(nu, 0.0), z);
    if (std::fabs(v.imag()) > 1e-5 * std::fabs(v.real()) + 1e-250)
        throw NumericalError("hyp2f1_conj_pair: value not real within tolerance");
    return v.real();
}

} // namespace ik::complexfn
