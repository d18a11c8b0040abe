#include "indexkernel/identities.hpp"

#include "indexkernel/complexfn.hpp"
#include "indexkernel/quad.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

namespace ik::identities {

namespace cf = ik::complexfn;
namespace kn = ik::kernels;
namespace sr = ik::series;
namespace q = ik::quad;

namespace {

// One evaluated side: value (complex for the character cases), the series
// truncation certificate, and accumulated quadrature error estimates.
struct Side {
    Cplx value{0.0, 0.0};
    double tail = 0.0;
    double quad_err = 0.0;
};

double csch_arg(double alpha, int n) { return num::pi * n / alpha; } // pi n / alpha

double cosh_2pin(double alpha, int n) { return std::cosh(2.0 * num::pi * n / alpha); }
double cosh_pin(double alpha, int n) { return std::cosh(num::pi * n / alpha); }

// K_nu(w) <= sqrt(pi/2w) exp(nu^2/2w) e^{-w}  (from cosh t >= 1 + t^2/2).
double macdonald_bound(double nu, double w)
{
    if (!std::isfinite(w) || w > 745.0)
        return 0.0;
    return std::sqrt(0.5 * num::pi / w) * std::exp(0.5 * nu * nu / w - w);
}

// erfc(t) <= exp(-t^2)/(t sqrt(pi)) for t > 0.
double erfc_bound(double t)
{
    const double e = -t * t;
    if (e < num::exp_underflow)
        return 0.0;
    return std::exp(e) / (t * num::sqrt_pi);
}

// Envelope for the scaled cylinder function e^{z^2/4} D_p(z), z > 0.
double dt_envelope(double p, double z)
{
    if (!std::isfinite(z))
        return 0.0;
    if (p <= 0.0) {
        // decreasing from its value at 0, and also <= z^p
        const double at0 = std::exp2(0.5 * p) * num::sqrt_pi * cf::rgamma_real(0.5 * (1.0 - p));
        return 1.000001 * std::min(at0, std::pow(z, p));
    }
    // recurrence-lift growth bound
    return 2.6 * std::pow(z + 3.0, std::ceil(p) + 2.0);
}

// |W_{mu, i tau}(x)| envelope from the large-index bound, polynomial factor
// rounded up to the next integer power, with slack for the unquantified
// 1 + O(1/tau) correction.
double whittaker_envelope(double mu, double tau, double x)
{
    const double p = std::max(0.0, std::ceil(mu - 0.5));
    const double e = -0.5 * num::pi * tau;
    if (e < num::exp_underflow)
        return 0.0;
    return 4.0 * num::sqrt_2 * std::sqrt(x) * std::pow(std::max(tau, 1.0), p) * std::exp(e);
}

// sup_t |J_p(t)| sqrt(t): numeric calibration against the oscillatory
// amplitude, floored at the asymptotic level sqrt(2/pi).
double bessel_amplitude_bound(double p)
{
    if (p < 0.0)
        return 1.5;
    double sup = std::sqrt(2.0 / num::pi);
    for (double t = 0.05; t <= 60.0; t += 0.05)
        sup = std::max(sup, std::fabs(std::cyl_bessel_j(p, t)) * std::sqrt(t));
    return 1.05 * sup;
}

// Whittaker term through the Mellin-Barnes route with error accounting.
double w_mb_term(double mu, double tau, double x, double abs_tol, Side& side)
{
    kn::KernelValue kv = kn::whittaker_route(mu, tau, x, kn::WhittakerRoute::mellin_barnes,
                                             1e-11, abs_tol);
    side.quad_err += kv.abs_error;
    return kv.value;
}

void require(bool ok, const char* constraint)
{
    if (!ok)
        throw DomainError(std::string("identity parameter outside validity domain: ") + constraint);
}

struct CharPair {
    const sr::CharacterSpec* chi;
};

const sr::CharacterSpec& char_for(const IdentityCase& c)
{
    if (c.chi)
        return *c.chi;
    return c.id == CaseId::CHAR_ODD ? sr::CharacterSpec::mod5_odd() : sr::CharacterSpec::mod5_even();
}

// ---------------------------------------------------------------------------
// Case evaluators. LHS = index side, RHS = cosh side; the kernel routes on
// the two sides are disjoint (see list_cases()).
// ---------------------------------------------------------------------------

Side lhs_thm1(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double term_tol = 0.03 * o.series_tol;
    s.value = w_mb_term(p.mu, 0.0, p.x, term_tol, s);
    auto term = [&](int n) { return 2.0 * w_mb_term(p.mu, p.alpha * n, p.x, term_tol, s); };
    auto env = [&](int n) { return 2.0 * whittaker_envelope(p.mu, p.alpha * n, p.x); };
    sr::SeriesValue sv = sr::sum_index_side(term, env, o.series_tol, o.n_max);
    s.value += sv.value;
    s.tail = sv.tail_bound;
    return s;
}

Side rhs_thm1(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double pref = std::exp2(-p.mu) * std::sqrt(num::pi * p.x) / p.alpha;
    const double sq2x = std::sqrt(2.0 * p.x);
    auto dt_term = [&](int n) {
        const double e = -0.5 * p.x * cosh_2pin(p.alpha, n);
        if (e < num::exp_underflow)
            return 0.0;
        return std::exp(e) * kn::parabolic_d_scaled(2.0 * p.mu, sq2x * cosh_pin(p.alpha, n));
    };
    auto env = [&](int n) {
        const double e = -0.5 * p.x * cosh_2pin(p.alpha, n);
        if (e < num::exp_underflow)
            return 0.0;
        return 2.0 * std::exp(e) * dt_envelope(2.0 * p.mu, sq2x * cosh_pin(p.alpha, n));
    };
    const double n0 = std::exp(-0.5 * p.x) * kn::parabolic_d_scaled(2.0 * p.mu, sq2x);
    sr::SeriesValue sv = sr::sum_cosh_side([&](int n) { return 2.0 * dt_term(n); }, env,
                                           o.series_tol / pref, 64);
    s.value = pref * (n0 + sv.value);
    s.tail = pref * sv.tail_bound;
    s.quad_err = 1e-12 * std::abs(s.value);
    return s;
}

Side lhs_cor1(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double k0_half = kn::macdonald_imag(0.0, 0.5 * p.x); // K_0(x cos(pi/3))
    s.value = kn::macdonald_imag(0.0, p.x);
    auto term = [&](int n) { return 2.0 * kn::macdonald_imag(p.alpha * n, p.x); };
    auto env = [&](int n) { return 2.0 * std::exp(-num::pi / 3.0 * p.alpha * n) * k0_half; };
    sr::SeriesValue sv = sr::sum_index_side(term, env, o.series_tol, o.n_max);
    s.value += sv.value;
    s.tail = sv.tail_bound;
    s.quad_err = 1e-12 * std::abs(s.value);
    return s;
}

Side rhs_cor1(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double pref = num::pi / p.alpha;
    auto term = [&](int n) {
        const double e = -p.x * cosh_2pin(p.alpha, n);
        return e < num::exp_underflow ? 0.0 : 2.0 * pref * std::exp(e);
    };
    sr::SeriesValue sv = sr::sum_cosh_side(term, term, o.series_tol, 64);
    s.value = pref * std::exp(-p.x) + sv.value;
    s.tail = sv.tail_bound;
    return s;
}

Side lhs_cor2a(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double y = *p.y;
    const double kx = kn::macdonald_imag(0.0, 0.5 * p.x), ky = kn::macdonald_imag(0.0, 0.5 * y);
    s.value = kn::macdonald_imag(0.0, p.x) * kn::macdonald_imag(0.0, y);
    auto term = [&](int n) {
        return 2.0 * kn::macdonald_imag(p.alpha * n, p.x) * kn::macdonald_imag(p.alpha * n, y);
    };
    auto env = [&](int n) { return 2.0 * kx * ky * std::exp(-2.0 * num::pi / 3.0 * p.alpha * n); };
    sr::SeriesValue sv = sr::sum_index_side(term, env, o.series_tol, o.n_max);
    s.value += sv.value;
    s.tail = sv.tail_bound;
    s.quad_err = 1e-12 * std::abs(s.value);
    return s;
}

Side rhs_cor2a(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double y = *p.y;
    const double pref = num::pi / p.alpha;
    // cancellation-free argument: x^2+y^2+2xy cosh(2v) = (x+y)^2 + 4xy sinh^2(v)
    auto warg = [&](int n) {
        const double sh = std::sinh(csch_arg(p.alpha, n));
        return std::sqrt((p.x + y) * (p.x + y) + 4.0 * p.x * y * sh * sh);
    };
    auto term = [&](int n) {
        const double w = warg(n);
        if (!std::isfinite(w) || w > 745.0)
            return 0.0;
        return 2.0 * pref * kn::macdonald_complex_order(0.0, 0.0, w).real();
    };
    auto env = [&](int n) { return 2.0 * pref * macdonald_bound(0.0, warg(n)); };
    sr::SeriesValue sv = sr::sum_cosh_side(term, env, o.series_tol, 64);
    s.value = pref * kn::macdonald_complex_order(0.0, 0.0, p.x + y).real() + sv.value;
    s.tail = sv.tail_bound;
    s.quad_err = 1e-12 * std::abs(s.value);
    return s;
}

Side lhs_cor2b(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double sg = *p.sigma;
    const double ks = kn::macdonald_real_order(sg, 0.5 * p.x);
    auto term = [&](int n) {
        return 2.0 * std::norm(kn::macdonald_complex_order(sg, p.alpha * n, p.x));
    };
    auto env = [&](int n) { return 2.0 * ks * ks * std::exp(-2.0 * num::pi / 3.0 * p.alpha * n); };
    const double k0 = kn::macdonald_complex_order(sg, 0.0, p.x).real();
    s.value = k0 * k0;
    sr::SeriesValue sv = sr::sum_index_side(term, env, o.series_tol, o.n_max);
    s.value += sv.value;
    s.tail = sv.tail_bound;
    s.quad_err = 1e-12 * std::abs(s.value);
    return s;
}

Side rhs_cor2b(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double sg = *p.sigma;
    const double pref = num::pi / p.alpha;
    auto term = [&](int n) {
        const double w = 2.0 * p.x * cosh_pin(p.alpha, n);
        if (w > 745.0)
            return 0.0;
        return 2.0 * pref * kn::macdonald_real_order(2.0 * sg, w);
    };
    auto env = [&](int n) {
        return 2.0 * pref * macdonald_bound(2.0 * sg, 2.0 * p.x * cosh_pin(p.alpha, n));
    };
    sr::SeriesValue sv = sr::sum_cosh_side(term, env, o.series_tol, 64);
    s.value = pref * kn::macdonald_real_order(2.0 * sg, 2.0 * p.x) + sv.value;
    s.tail = sv.tail_bound;
    s.quad_err = 1e-12 * std::abs(s.value);
    return s;
}

Side lhs_cor3a(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double phi = *p.phi;
    s.value = 2.0 * phi / num::pi;
    auto term = [&](int n) {
        return 2.0 * std::sinh(p.alpha * phi * n) / std::sinh(0.5 * num::pi * p.alpha * n);
    };
    const double c = 2.0 / (1.0 - std::exp(-num::pi * p.alpha));
    auto env = [&](int n) { return c * std::exp(-(0.5 * num::pi - phi) * p.alpha * n); };
    sr::SeriesValue sv = sr::sum_index_side(term, env, o.series_tol, o.n_max);
    s.value += sv.value;
    s.tail = sv.tail_bound;
    return s;
}

Side rhs_cor3a(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double phi = *p.phi;
    const double s2 = std::sin(phi) * std::sin(phi);
    s.value = 2.0 * std::tan(phi) / p.alpha;
    const double pref = 2.0 * std::sin(2.0 * phi) / p.alpha;
    auto term = [&](int n) {
        const double ch = cosh_2pin(p.alpha, n);
        return pref / (ch * ch - s2);
    };
    auto env = [&](int n) {
        return pref / (1.0 - s2) * 4.0 * std::exp(-4.0 * num::pi * n / p.alpha);
    };
    sr::SeriesValue sv = sr::sum_index_side(term, env, o.series_tol, o.n_max);
    s.value += sv.value;
    s.tail = sv.tail_bound;
    return s;
}

Side lhs_cor3b(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double phi = *p.phi;
    s.value = 1.0;
    auto term = [&](int n) {
        return 2.0 * std::cosh(p.alpha * phi * n) / std::cosh(0.5 * num::pi * p.alpha * n);
    };
    auto env = [&](int n) { return 4.0 * std::exp(-(0.5 * num::pi - phi) * p.alpha * n); };
    sr::SeriesValue sv = sr::sum_index_side(term, env, o.series_tol, o.n_max);
    s.value += sv.value;
    s.tail = sv.tail_bound;
    return s;
}

Side rhs_cor3b(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double phi = *p.phi;
    const double s2 = std::sin(phi) * std::sin(phi);
    s.value = 2.0 / (p.alpha * std::cos(phi));
    const double pref = 4.0 * std::cos(phi) / p.alpha;
    const double c = 1.0 / (1.0 - s2 / (cosh_2pin(p.alpha, 1) * cosh_2pin(p.alpha, 1)));
    auto term = [&](int n) {
        const double ch = cosh_2pin(p.alpha, n);
        return pref * ch / (ch * ch - s2);
    };
    auto env = [&](int n) { return pref * c * 2.0 * std::exp(-2.0 * num::pi * n / p.alpha); };
    sr::SeriesValue sv = sr::sum_index_side(term, env, o.series_tol, o.n_max);
    s.value += sv.value;
    s.tail = sv.tail_bound;
    return s;
}

Side lhs_cor4(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    s.value = cf::exp_integral_e1(p.x);
    const double pref = 2.0 / p.alpha * std::sqrt(p.x / num::pi) * std::exp(-0.5 * p.x);
    auto term = [&](int n) {
        return pref * kn::macdonald_complex_order(0.5, p.alpha * n, 0.5 * p.x).imag() / n;
    };
    // |K_{1/2+i tau}(x/2)| <= e^{-delta tau} K_{1/2}(x/4), K_{1/2} in closed form
    const double k_half = std::sqrt(num::pi / (0.5 * p.x)) * std::exp(-0.25 * p.x);
    auto env = [&](int n) {
        return pref * k_half * std::exp(-num::pi / 3.0 * p.alpha * n) / n;
    };
    sr::SeriesValue sv = sr::sum_index_side(term, env, o.series_tol, o.n_max);
    s.value += sv.value;
    s.tail = sv.tail_bound;
    s.quad_err = 1e-12 * std::abs(s.value);
    return s;
}

Side rhs_cor4(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double pref = num::pi / p.alpha;
    const double sx = std::sqrt(p.x);
    auto term = [&](int n) { return 2.0 * pref * cf::erfc(sx * cosh_pin(p.alpha, n)); };
    auto env = [&](int n) { return 2.0 * pref * erfc_bound(sx * cosh_pin(p.alpha, n)); };
    sr::SeriesValue sv = sr::sum_cosh_side(term, env, o.series_tol, 64);
    s.value = pref * cf::erfc(sx) + sv.value;
    s.tail = sv.tail_bound;
    return s;
}

// Shared LHS of COR5 and its two reductions: sum of
// |Gamma(mu+i alpha n)|^2 2F1(mu+i alpha n, mu-i alpha n; nu; -x^2).
Side lhs_cor5_family(double mu, double nu, const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double z = -p.x * p.x;
    s.value = cf::gamma_modulus_sq(mu, 0.0) * cf::hyp2f1_conj_pair(mu, 0.0, nu, z);
    const double c_bessel = bessel_amplitude_bound(nu - 1.0);
    // bound from the Olevskii representation at delta = pi/3
    const double c0 = c_bessel * cf::gamma_real(nu) *
                      std::pow(cf::gamma_real(mu - 0.5 * nu + 0.25), 2) *
                      std::exp2(2.0 * mu - nu + 0.5) /
                      (num::sqrt_2 * std::pow(p.x, nu - 0.5));
    auto term = [&](int n) {
        return 2.0 * cf::gamma_modulus_sq(mu, p.alpha * n) *
               cf::hyp2f1_conj_pair(mu, p.alpha * n, nu, z);
    };
    auto env = [&](int n) { return 2.0 * c0 * std::exp(-2.0 * num::pi / 3.0 * p.alpha * n); };
    sr::SeriesValue sv = sr::sum_index_side(term, env, o.series_tol, o.n_max);
    s.value += sv.value;
    s.tail = sv.tail_bound;
    return s;
}

Side rhs_cor5(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double mu = p.mu, nu = *p.nu;
    const double pref = num::pi / p.alpha * std::exp2(2.0 - 2.0 * mu) * cf::gamma_real(2.0 * mu);
    auto f = [&](double c) {
        return cf::hyp2f1(Cplx(mu, 0), Cplx(mu + 0.5, 0), Cplx(nu, 0), -p.x * p.x / (c * c))
            .real();
    };
    auto term = [&](int n) {
        const double c = cosh_pin(p.alpha, n);
        return 2.0 * pref * std::pow(c, -2.0 * mu) * f(c);
    };
    auto env = [&](int n) {
        return 2.0 * pref * 2.0 * std::pow(2.0 * std::exp(-csch_arg(p.alpha, n)), 2.0 * mu);
    };
    sr::SeriesValue sv = sr::sum_index_side(term, env, o.series_tol, o.n_max);
    s.value = pref * f(1.0) + sv.value;
    s.tail = sv.tail_bound;
    return s;
}

// nu = 2 mu reduction: closed elementary RHS.
Side rhs_cor5_2mu(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double mu = p.mu;
    const double pref = 2.0 * num::pi * cf::gamma_real(2.0 * mu) / p.alpha;
    auto g = [&](double c) {
        const double r = std::sqrt(p.x * p.x + c * c);
        return 1.0 / r * std::pow(c + r, 1.0 - 2.0 * mu);
    };
    auto term = [&](int n) { return 2.0 * pref * g(cosh_pin(p.alpha, n)); };
    auto env = [&](int n) {
        return 2.0 * pref * std::exp2(1.0 - 2.0 * mu) *
               std::pow(2.0 * std::exp(-csch_arg(p.alpha, n)), 2.0 * mu) * 4.0;
    };
    sr::SeriesValue sv = sr::sum_index_side(term, env, o.series_tol, o.n_max);
    s.value = pref * g(1.0) + sv.value;
    s.tail = sv.tail_bound;
    return s;
}

// nu = 2 mu + 1 reduction.
Side rhs_cor5_2mu1(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double mu = p.mu;
    const double pref = 4.0 * num::pi * cf::gamma_real(2.0 * mu) / p.alpha;
    auto g = [&](double c) { return std::pow(c + std::sqrt(c * c + p.x * p.x), -2.0 * mu); };
    auto term = [&](int n) { return 2.0 * pref * g(cosh_pin(p.alpha, n)); };
    auto env = [&](int n) {
        return 2.0 * pref * std::pow(2.0 * std::exp(-csch_arg(p.alpha, n)), 2.0 * mu) * 2.0;
    };
    sr::SeriesValue sv = sr::sum_index_side(term, env, o.series_tol, o.n_max);
    s.value = pref * g(1.0) + sv.value;
    s.tail = sv.tail_bound;
    return s;
}

Side lhs_cor6(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double mu = p.mu;
    s.value = kn::lommel_weighted(mu, 0.0, p.x);
    const double c0 = std::pow(p.x, mu - 1.0) *
                      std::pow(cf::gamma_real(0.5 * (1.0 - mu)), 2) * std::exp2(1.0 - mu);
    auto term = [&](int n) { return 2.0 * kn::lommel_weighted(mu, p.alpha * n, p.x); };
    auto env = [&](int n) { return 2.0 * c0 * std::exp(-num::pi / 3.0 * p.alpha * n); };
    sr::SeriesValue sv = sr::sum_index_side(term, env, o.series_tol, o.n_max);
    s.value += sv.value;
    s.tail = sv.tail_bound;
    s.quad_err = 1e-11 * std::abs(s.value);
    return s;
}

Side rhs_cor6(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double mu = p.mu;
    const double pref =
        std::exp2(mu + 1.0) * num::pi * cf::gamma_real(1.0 - mu) * std::sqrt(p.x) / p.alpha;
    auto term = [&](int n) {
        const double c = cosh_2pin(p.alpha, n);
        if (!std::isfinite(c))
            return 0.0;
        return 2.0 * pref * std::sqrt(c) * kn::lommel_half(mu, p.x * c);
    };
    // 0 < S_{mu-1/2,1/2}(w) <= w^{mu-3/2}
    auto env = [&](int n) {
        const double c = cosh_2pin(p.alpha, n);
        if (!std::isfinite(c))
            return 0.0;
        return 2.0 * pref * std::sqrt(c) * std::pow(p.x * c, mu - 1.5);
    };
    sr::SeriesValue sv = sr::sum_index_side(term, env, o.series_tol, o.n_max);
    s.value = pref * kn::lommel_half(mu, p.x) + sv.value;
    s.tail = sv.tail_bound;
    s.quad_err = 1e-11 * std::abs(s.value);
    return s;
}

Side lhs_cor7(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double k0_half = kn::macdonald_imag(0.0, 0.5 * p.x);
    s.value = kn::macdonald_imag(0.0, p.x);
    auto term = [&](int n) {
        return 2.0 * kn::macdonald_imag(p.alpha * n, p.x) / std::cosh(num::pi * p.alpha * n);
    };
    auto env = [&](int n) {
        return 4.0 * k0_half * std::exp(-(num::pi / 3.0 + num::pi) * p.alpha * n);
    };
    sr::SeriesValue sv = sr::sum_index_side(term, env, o.series_tol, o.n_max);
    s.value += sv.value;
    s.tail = sv.tail_bound;
    s.quad_err = 1e-12 * std::abs(s.value);
    return s;
}

Side rhs_cor7(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double pref = num::pi / p.alpha;
    const double s2x = std::sqrt(2.0 * p.x);
    // e^{x cosh(2 pi n/a)} erfc(sqrt(2x) cosh(pi n/a)) = e^{-x} erfcx(sqrt(2x) cosh(pi n/a))
    auto term = [&](int n) {
        return 2.0 * pref * std::exp(-p.x) * cf::erfcx(s2x * cosh_pin(p.alpha, n));
    };
    auto env = [&](int n) {
        return 2.0 * pref * std::exp(-p.x) / (s2x * cosh_pin(p.alpha, n) * num::sqrt_pi);
    };
    sr::SeriesValue sv = sr::sum_index_side(term, env, o.series_tol, o.n_max);
    s.value = pref * std::exp(-p.x) * cf::erfcx(s2x) + sv.value;
    s.tail = sv.tail_bound;
    return s;
}

Side lhs_cor8(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double term_tol = 0.02 * o.series_tol;
    s.value = w_mb_term(-0.25, 0.0, p.x, term_tol, s) * w_mb_term(0.25, 0.0, p.x, term_tol, s);
    auto term = [&](int n) {
        const double tau = p.alpha * n;
        return 2.0 * w_mb_term(-0.25, tau, p.x, term_tol, s) *
               w_mb_term(0.25, tau, p.x, term_tol, s);
    };
    auto env = [&](int n) {
        const double e = -num::pi * p.alpha * n;
        return e < num::exp_underflow ? 0.0 : 16.0 * p.x * std::exp(e);
    };
    sr::SeriesValue sv = sr::sum_index_side(term, env, o.series_tol, o.n_max);
    s.value += sv.value;
    s.tail = sv.tail_bound;
    return s;
}

Side rhs_cor8(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double pref = p.x / (num::sqrt_2 * p.alpha);
    auto term = [&](int n) {
        const double w = 0.5 * p.x * cosh_pin(p.alpha, n);
        const double e = -w;
        if (e < num::exp_underflow || w > 745.0)
            return 0.0;
        return 2.0 * pref * std::exp(e) * kn::macdonald_imag(0.0, w);
    };
    auto env = [&](int n) {
        const double w = 0.5 * p.x * cosh_pin(p.alpha, n);
        if (!std::isfinite(w) || 2.0 * w > 745.0)
            return 0.0;
        return 2.0 * pref * std::sqrt(0.5 * num::pi / w) * std::exp(-2.0 * w);
    };
    sr::SeriesValue sv = sr::sum_cosh_side(term, env, o.series_tol, 64);
    s.value = pref * std::exp(-0.5 * p.x) * kn::macdonald_imag(0.0, 0.5 * p.x) + sv.value;
    s.tail = sv.tail_bound;
    s.quad_err = 1e-12 * std::abs(s.value);
    return s;
}

Side lhs_cor9(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double mu = p.mu;
    const double term_tol = 0.02 * o.series_tol;
    s.value = cf::gamma_modulus_sq(0.5 - mu, 0.0) * w_mb_term(mu, 0.0, p.x, term_tol, s);
    // rigorous envelope from the Gamma-weighted Laplace representation
    const double c0 = std::pow(p.x, mu) * std::exp(-0.5 * p.x) *
                      std::pow(cf::gamma_real(0.5 - mu), 2) * std::exp2(1.0 - 2.0 * mu);
    auto term = [&](int n) {
        const double gw = cf::gamma_modulus_sq(0.5 - mu, p.alpha * n);
        if (gw == 0.0)
            return 0.0;
        return 2.0 * gw * w_mb_term(mu, p.alpha * n, p.x, term_tol / std::max(1.0, gw), s);
    };
    auto env = [&](int n) {
        const double e = -2.0 * num::pi / 3.0 * p.alpha * n;
        return e < num::exp_underflow ? 0.0 : 2.0 * c0 * std::exp(e);
    };
    sr::SeriesValue sv = sr::sum_index_side(term, env, o.series_tol, o.n_max);
    s.value += sv.value;
    s.tail = sv.tail_bound;
    return s;
}

Side rhs_cor9(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double mu = p.mu;
    const double pref = num::pi * std::exp2(mu + 0.5) * std::sqrt(p.x) *
                        cf::gamma_real(1.0 - 2.0 * mu) / p.alpha;
    const double sq2x = std::sqrt(2.0 * p.x);
    const double exh = std::exp(-0.5 * p.x);
    // e^{x sinh^2/2} D_{2mu-1}(sqrt(2x) cosh) = e^{-x/2} [e^{z^2/4} D_{2mu-1}](z)
    auto term = [&](int n) {
        return 2.0 * pref * exh * kn::parabolic_d_scaled(2.0 * mu - 1.0, sq2x * cosh_pin(p.alpha, n));
    };
    auto env = [&](int n) {
        return 2.0 * pref * exh * std::pow(sq2x * cosh_pin(p.alpha, n), 2.0 * mu - 1.0) * 1.000001;
    };
    sr::SeriesValue sv = sr::sum_index_side(term, env, o.series_tol, o.n_max);
    s.value = pref * exh * kn::parabolic_d_scaled(2.0 * mu - 1.0, sq2x) + sv.value;
    s.tail = sv.tail_bound;
    s.quad_err = 1e-11 * std::abs(s.value);
    return s;
}

Side lhs_gamma_lattice(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double hs = 0.5 * *p.sigma; // s/2
    s.value = cf::gamma_modulus_sq(hs, 0.0);
    auto term = [&](int n) { return 2.0 * cf::gamma_modulus_sq(hs, p.alpha * n); };
    auto env = [&](int n) { return 2.000001 * cf::gamma_modulus_sq(hs, p.alpha * n); };
    sr::SeriesValue sv = sr::sum_index_side(term, env, o.series_tol, o.n_max);
    s.value += sv.value;
    s.tail = sv.tail_bound;
    return s;
}

Side rhs_gamma_lattice(const LatticeCase& p, const VerifyOptions& o)
{
    Side s;
    const double sp = *p.sigma;
    const double pref = num::sqrt_pi / p.alpha *
                        std::exp(cf::log_gamma_real(0.5 * sp) + cf::log_gamma_real(0.5 * (sp + 1.0)));
    auto term = [&](int n) {
        return 2.0 * pref * std::pow(1.0 / cosh_pin(p.alpha, n), sp);
    };
    auto env = [&](int n) {
        return 2.0 * pref * std::pow(2.0 * std::exp(-csch_arg(p.alpha, n)), sp);
    };
    sr::SeriesValue sv = sr::sum_index_side(term, env, o.series_tol, o.n_max);
    s.value = pref + sv.value;
    s.tail = sv.tail_bound;
    return s;
}

Side lhs_char(const IdentityCase& c, const VerifyOptions& o)
{
    Side s;
    const LatticeCase& p = c.params;
    const sr::CharacterSpec& chi = char_for(c);
    const bool odd = c.id == CaseId::CHAR_ODD;
    const double term_tol = 0.02 * o.series_tol;
    auto term = [&](int n) {
        const double w = w_mb_term(p.mu, p.alpha * n, p.x, term_tol, s);
        return odd ? n * w : w;
    };
    auto env = [&](int n) {
        const double e = whittaker_envelope(p.mu, p.alpha * n, p.x);
        return odd ? n * e : e;
    };
    sr::CxSeriesValue sv = sr::sum_character(term, chi, false, env, o.series_tol, o.n_max);
    s.value = sv.value;
    s.tail = sv.tail_bound;
    return s;
}

Side rhs_char(const IdentityCase& c, const VerifyOptions& o)
{
    Side s;
    const LatticeCase& p = c.params;
    const sr::CharacterSpec& chi = char_for(c);
    const bool odd = c.id == CaseId::CHAR_ODD;
    const double qa = chi.q * p.alpha;
    const double sq2x = std::sqrt(2.0 * p.x);
    const double order = odd ? 2.0 * p.mu + 1.0 : 2.0 * p.mu;
    Cplx pref;
    if (odd)
        pref = Cplx(0.0, -1.0) * std::exp2(-p.mu - 0.5) * num::sqrt_pi * p.x * chi.gauss_sum / qa;
    else
        pref = std::exp2(-p.mu) * std::sqrt(num::pi * p.x) * chi.gauss_sum / qa;
    auto term = [&](int n) {
        const double e = -0.5 * p.x * cosh_2pin(qa, n);
        if (e < num::exp_underflow)
            return 0.0;
        double v = std::exp(e) * kn::parabolic_d_scaled(order, sq2x * cosh_pin(qa, n));
        if (odd)
            v *= std::sinh(csch_arg(qa, n));
        return v;
    };
    auto env = [&](int n) {
        const double e = -0.5 * p.x * cosh_2pin(qa, n);
        if (e < num::exp_underflow)
            return 0.0;
        double v = std::exp(e) * dt_envelope(order, sq2x * cosh_pin(qa, n));
        if (odd)
            v *= std::cosh(csch_arg(qa, n));
        return v;
    };
    sr::CxSeriesValue sv =
        sr::sum_character(term, chi, true, env, o.series_tol / std::abs(pref), o.n_max);
    s.value = pref * sv.value;
    s.tail = std::abs(pref) * sv.tail_bound;
    s.quad_err = 1e-11 * std::abs(s.value);
    return s;
}

// ---------------------------------------------------------------------------
// Fourier pairs
// ---------------------------------------------------------------------------

struct PairShape {
    double amp;   // index-side envelope amplitude C
    double ppow;  // polynomial power in the envelope
    double rate;  // exponential decay rate of the envelope
};

PairShape pair_shape(CaseId which, double mu, double x)
{
    switch (which) {
    case CaseId::FOURIER_PAIR_L1:
        return {4.0 * num::sqrt_2 * std::sqrt(x), std::max(0.0, std::ceil(mu - 0.5)),
                0.5 * num::pi};
    case CaseId::FOURIER_PAIR_C8:
        return {16.0 * x, 0.0, num::pi};
    case CaseId::FOURIER_PAIR_C9:
        return {2.0 * std::pow(x, mu) * std::exp(-0.5 * x) *
                    std::pow(cf::gamma_real(0.5 - mu), 2) * std::exp2(1.0 - 2.0 * mu),
                0.0, 2.0 * num::pi / 3.0};
    default:
        throw DomainError("pair_shape: not a Fourier pair id");
    }
}

// g(tau): the index-side integrand of the forward transform.
double pair_integrand(CaseId which, double mu, double tau, double x, double abs_tol, Side& side)
{
    switch (which) {
    case CaseId::FOURIER_PAIR_L1:
        return w_mb_term(mu, tau, x, abs_tol, side);
    case CaseId::FOURIER_PAIR_C8:
        return w_mb_term(-0.25, tau, x, abs_tol, side) * w_mb_term(0.25, tau, x, abs_tol, side);
    case CaseId::FOURIER_PAIR_C9:
        return cf::gamma_modulus_sq(0.5 - mu, tau) * w_mb_term(mu, tau, x, abs_tol, side);
    default:
        throw DomainError("pair_integrand: not a Fourier pair id");
    }
}

double pair_forward_rhs(CaseId which, double mu, double x, double xi)
{
    const double ch = std::cosh(0.5 * xi);
    const double sq2x = std::sqrt(2.0 * x);
    switch (which) {
    case CaseId::FOURIER_PAIR_L1: {
        const double e = -0.5 * x * std::cosh(xi);
        return std::exp2(-mu) * std::sqrt(num::pi * x) * std::exp(e) *
               kn::parabolic_d_scaled(2.0 * mu, sq2x * ch);
    }
    case CaseId::FOURIER_PAIR_C8: {
        const double w = 0.5 * x * ch;
        return x / num::sqrt_2 * std::exp(-w) * kn::macdonald_imag(0.0, w);
    }
    case CaseId::FOURIER_PAIR_C9:
        return num::pi * std::exp2(mu + 0.5) * std::sqrt(x) * cf::gamma_real(1.0 - 2.0 * mu) *
               std::exp(-0.5 * x) * kn::parabolic_d_scaled(2.0 * mu - 1.0, sq2x * ch);
    default:
        throw DomainError("pair_forward_rhs: not a Fourier pair id");
    }
}

IdentityReport compare_sides(const IdentityCase& c, const Side& L, const Side& R, double tol)
{
    IdentityReport r;
    r.kase = c;
    r.lhs = L.value.real();
    r.rhs = R.value.real();
    r.lhs_im = L.value.imag();
    r.rhs_im = R.value.imag();
    r.abs_err = std::abs(L.value - R.value);
    const double denom = std::max({std::abs(L.value), std::abs(R.value), 1e-300});
    r.rel_err = r.abs_err / denom;
    r.lhs_tail_bound = L.tail;
    r.rhs_tail_bound = R.tail;
    r.lhs_quad_err = L.quad_err;
    r.rhs_quad_err = R.quad_err;
    r.pass = r.rel_err <= tol ||
             (std::abs(L.value) <= 1e-12 && std::abs(R.value) <= 1e-12);
    return r;
}

IdentityReport fourier_forward(CaseId which, double mu, double x, double xi, double tol,
                               const VerifyOptions& o)
{
    Side R;
    R.value = pair_forward_rhs(which, mu, x, xi);
    R.quad_err = 1e-11 * std::abs(R.value);

    Side L;
    const PairShape sh = pair_shape(which, mu, x);
    const double target = std::max(1e-13, 0.02 * tol * std::abs(R.value));
    const double cap =
        q::solve_t_cap(sh.ppow, sh.rate, std::max(target / (10.0 * sh.amp), 1e-280));
    const double inner_tol = std::min(1e-13, target / (8.0 * cap));
    auto g = [&](double tau) {
        return pair_integrand(which, mu, tau, x, inner_tol, L) * std::cos(tau * xi);
    };
    q::QuadratureResult qr = q::integrate_finite(g, 0.0, cap, 1e-11, 0.5 * target);
    L.value = 2.0 * qr.value.real();
    L.quad_err += 2.0 * qr.abs_error_estimate;
    // certified truncation of the tau integral
    L.tail = 2.0 * sh.amp * std::pow(cap, sh.ppow) * std::exp(-sh.rate * cap) / sh.rate *
             (1.0 / (1.0 - sh.ppow / std::max(sh.rate * cap, 2.0 * sh.ppow + 1.0)));

    IdentityCase c;
    c.id = which;
    c.params.mu = mu;
    c.params.x = x;
    c.params.xi = xi;
    IdentityReport r = compare_sides(c, L, R, tol);
    r.note = "forward transform";
    return r;
}

IdentityReport fourier_inverse(CaseId which, double mu, double x, double tau, double tol,
                               const VerifyOptions& o)
{
    Side L, R;
    switch (which) {
    case CaseId::FOURIER_PAIR_L1: {
        kn::KernelValue lv =
            kn::whittaker_route(mu, tau, x, kn::WhittakerRoute::fourier_inversion, 1e-11);
        kn::KernelValue rv =
            kn::whittaker_route(mu, tau, x, kn::WhittakerRoute::mellin_barnes, 1e-11);
        L.value = lv.value;
        L.quad_err = lv.abs_error;
        R.value = rv.value;
        R.quad_err = rv.abs_error;
        break;
    }
    case CaseId::FOURIER_PAIR_C8: {
        const double Xi = 2.0 * std::acosh(std::max(3.0, 2.0 * 790.0 / x));
        auto f = [&](double xi) {
            const double w = 0.5 * x * std::cosh(0.5 * xi);
            if (w > 745.0)
                return 0.0;
            return std::exp(-w) * kn::macdonald_imag(0.0, w) * std::cos(tau * xi);
        };
        q::QuadratureResult qr = q::integrate_finite(f, 0.0, Xi, 1e-11, 1e-14);
        L.value = x / (num::sqrt_2 * num::pi) * qr.value.real();
        L.quad_err = x / (num::sqrt_2 * num::pi) * qr.abs_error_estimate;
        R.value = kn::whittaker_route(-0.25, tau, x, kn::WhittakerRoute::mellin_barnes, 1e-12).value *
                  kn::whittaker_route(0.25, tau, x, kn::WhittakerRoute::mellin_barnes, 1e-12).value;
        R.quad_err = 1e-11 * std::abs(R.value);
        break;
    }
    case CaseId::FOURIER_PAIR_C9: {
        const double sq2x = std::sqrt(2.0 * x);
        const double pref =
            std::exp2(mu - 0.5) * std::sqrt(x) * cf::gamma_real(1.0 - 2.0 * mu) * std::exp(-0.5 * x);
        const double sd = 0.5 - mu; // tail decay exponent of Dt_{2mu-1}(sqrt(2x) cosh(xi/2))
        const double A = std::pow(0.5 * sq2x, 2.0 * mu - 1.0);
        const double target = 1e-12;
        const double Xi = std::max(10.0, std::log(A / (sd * target)) / sd);
        auto f = [&](double xi) {
            return kn::parabolic_d_scaled(2.0 * mu - 1.0, sq2x * std::cosh(0.5 * xi)) *
                   std::cos(tau * xi);
        };
        q::QuadratureResult qr = q::integrate_finite(f, 0.0, Xi, 1e-11, 1e-13);
        L.value = pref * 2.0 * qr.value.real();
        L.quad_err = pref * 2.0 * qr.abs_error_estimate;
        L.tail = pref * 2.0 * A * std::exp(-sd * Xi) / sd;
        R.value = cf::gamma_modulus_sq(0.5 - mu, tau) *
                  kn::whittaker_route(mu, tau, x, kn::WhittakerRoute::mellin_barnes, 1e-12).value;
        R.quad_err = 1e-11 * std::abs(R.value);
        break;
    }
    default:
        throw DomainError("fourier_inverse: not a Fourier pair id");
    }
    (void)o;
    IdentityCase c;
    c.id = which;
    c.params.mu = mu;
    c.params.x = x;
    c.params.tau = tau;
    IdentityReport r = compare_sides(c, L, R, tol);
    r.note = "inverse round trip";
    return r;
}

void validate_case(const IdentityCase& c)
{
    const LatticeCase& p = c.params;
    require(p.alpha > 0.0, "alpha > 0");
    require(p.x > 0.0, "x > 0");
    switch (c.id) {
    case CaseId::COR2A:
        require(p.y.has_value() && *p.y > 0.0, "y > 0");
        break;
    case CaseId::COR2B:
        require(p.sigma.has_value(), "sigma required");
        break;
    case CaseId::COR3A:
    case CaseId::COR3B:
        require(p.phi.has_value() && *p.phi > 0.0 && *p.phi < 0.5 * num::pi, "0 < phi < pi/2");
        break;
    case CaseId::COR5:
        require(p.nu.has_value() && *p.nu > 0.0, "nu > 0");
        require(p.mu > 0.5 * *p.nu, "mu > nu/2");
        break;
    case CaseId::COR5_2MU:
    case CaseId::COR5_2MU1:
        require(p.mu > 0.0, "mu > 0");
        break;
    case CaseId::COR6:
        require(p.mu < 0.5, "mu < 1/2");
        break;
    case CaseId::COR9:
    case CaseId::FOURIER_PAIR_C9:
        require(p.mu < 0.5, "mu < 1/2");
        break;
    case CaseId::GAMMA_LATTICE:
        require(p.sigma.has_value() && *p.sigma > 0.0, "Re(s) > 0");
        break;
    case CaseId::CHAR_EVEN:
        require(char_for(c).parity == sr::Parity::even, "character must be even");
        break;
    case CaseId::CHAR_ODD:
        require(char_for(c).parity == sr::Parity::odd, "character must be odd");
        break;
    default:
        break;
    }
}

} // namespace

IdentityReport verify(const IdentityCase& c, double tol, const VerifyOptions& opt)
{
    validate_case(c);
    const auto t0 = std::chrono::steady_clock::now();
    IdentityReport r;
    switch (c.id) {
    case CaseId::THM1:
        r = compare_sides(c, lhs_thm1(c.params, opt), rhs_thm1(c.params, opt), tol);
        if (c.params.mu == 0.0)
            r.note = "mu = 0 reduces to COR1 through W_{0,nu}(2x) = sqrt(2x/pi) K_nu(x)";
        break;
    case CaseId::COR1:
        r = compare_sides(c, lhs_cor1(c.params, opt), rhs_cor1(c.params, opt), tol);
        break;
    case CaseId::COR2A:
        r = compare_sides(c, lhs_cor2a(c.params, opt), rhs_cor2a(c.params, opt), tol);
        break;
    case CaseId::COR2B:
        r = compare_sides(c, lhs_cor2b(c.params, opt), rhs_cor2b(c.params, opt), tol);
        break;
    case CaseId::COR3A:
        r = compare_sides(c, lhs_cor3a(c.params, opt), rhs_cor3a(c.params, opt), tol);
        break;
    case CaseId::COR3B:
        r = compare_sides(c, lhs_cor3b(c.params, opt), rhs_cor3b(c.params, opt), tol);
        break;
    case CaseId::COR4:
        r = compare_sides(c, lhs_cor4(c.params, opt), rhs_cor4(c.params, opt), tol);
        break;
    case CaseId::COR5:
        r = compare_sides(c, lhs_cor5_family(c.params.mu, *c.params.nu, c.params, opt),
                          rhs_cor5(c.params, opt), tol);
        break;
    case CaseId::COR5_2MU:
        r = compare_sides(c, lhs_cor5_family(c.params.mu, 2.0 * c.params.mu, c.params, opt),
                          rhs_cor5_2mu(c.params, opt), tol);
        break;
    case CaseId::COR5_2MU1:
        r = compare_sides(c, lhs_cor5_family(c.params.mu, 2.0 * c.params.mu + 1.0, c.params, opt),
                          rhs_cor5_2mu1(c.params, opt), tol);
        break;
    case CaseId::COR6:
        r = compare_sides(c, lhs_cor6(c.params, opt), rhs_cor6(c.params, opt), tol);
        break;
    case CaseId::COR7:
        r = compare_sides(c, lhs_cor7(c.params, opt), rhs_cor7(c.params, opt), tol);
        break;
    case CaseId::COR8:
        r = compare_sides(c, lhs_cor8(c.params, opt), rhs_cor8(c.params, opt), tol);
        break;
    case CaseId::COR9:
        r = compare_sides(c, lhs_cor9(c.params, opt), rhs_cor9(c.params, opt), tol);
        break;
    case CaseId::GAMMA_LATTICE:
        r = compare_sides(c, lhs_gamma_lattice(c.params, opt), rhs_gamma_lattice(c.params, opt),
                          tol);
        break;
    case CaseId::CHAR_EVEN:
    case CaseId::CHAR_ODD:
        r = compare_sides(c, lhs_char(c, opt), rhs_char(c, opt), tol);
        break;
    case CaseId::FOURIER_PAIR_L1:
    case CaseId::FOURIER_PAIR_C8:
    case CaseId::FOURIER_PAIR_C9: {
        const LatticeCase& p = c.params;
        if (c.params.tau.has_value())
            r = fourier_inverse(c.id, p.mu, p.x, *p.tau, tol, opt);
        else
            r = fourier_forward(c.id, p.mu, p.x, p.xi.value_or(1.0), tol, opt);
        break;
    }
    }
    const auto t1 = std::chrono::steady_clock::now();
    r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    r.kase = c;
    return r;
}

std::vector<IdentityReport> verify_fourier_pair(CaseId which, kernels::EvalPoint p,
                                                const std::vector<double>& xi_grid, double tol,
                                                const VerifyOptions& opt)
{
    if (which != CaseId::FOURIER_PAIR_L1 && which != CaseId::FOURIER_PAIR_C8 &&
        which != CaseId::FOURIER_PAIR_C9)
        throw DomainError("verify_fourier_pair: id must be one of the FOURIER_PAIR cases");
    if (which == CaseId::FOURIER_PAIR_C9 && !(p.mu < 0.5))
        throw DomainError("identity parameter outside validity domain: mu < 1/2");
    std::vector<IdentityReport> out;
    for (double xi : xi_grid)
        out.push_back(fourier_forward(which, p.mu, p.x, xi, tol, opt));
    out.push_back(fourier_inverse(which, p.mu, p.x, std::fabs(p.tau), tol, opt));
    return out;
}

const char* case_name(CaseId id)
{
    switch (id) {
    case CaseId::THM1: return "THM1";
    case CaseId::COR1: return "COR1";
    case CaseId::COR2A: return "COR2A";
    case CaseId::COR2B: return "COR2B";
    case CaseId::COR3A: return "COR3A";
    case CaseId::COR3B: return "COR3B";
    case CaseId::COR4: return "COR4";
    case CaseId::COR5: return "COR5";
    case CaseId::COR5_2MU: return "COR5_2MU";
    case CaseId::COR5_2MU1: return "COR5_2MU1";
    case CaseId::COR6: return "COR6";
    case CaseId::COR7: return "COR7";
    case CaseId::COR8: return "COR8";
    case CaseId::COR9: return "COR9";
    case CaseId::GAMMA_LATTICE: return "GAMMA_LATTICE";
    case CaseId::CHAR_EVEN: return "CHAR_EVEN";
    case CaseId::CHAR_ODD: return "CHAR_ODD";
    case CaseId::FOURIER_PAIR_L1: return "FOURIER_PAIR_L1";
    case CaseId::FOURIER_PAIR_C8: return "FOURIER_PAIR_C8";
    case CaseId::FOURIER_PAIR_C9: return "FOURIER_PAIR_C9";
    }
    return "?";
}

CaseId case_from_name(const std::string& name)
{
    for (int i = 0; i < kCaseCount; ++i)
        if (name == case_name(static_cast<CaseId>(i)))
            return static_cast<CaseId>(i);
    throw DomainError("unknown identity case id: " + name);
}

const std::vector<CaseInfo>& list_cases()
{
    static const std::vector<CaseInfo> cases = [] {
        std::vector<CaseInfo> v;
        auto mk = [&](CaseId id, std::string constraint, LatticeCase d,
                      std::vector<std::string> l, std::vector<std::string> r) {
            v.push_back(CaseInfo{id, std::move(constraint), d, std::move(l), std::move(r)});
        };
        LatticeCase d;
        d.mu = 0.25;
        mk(CaseId::THM1, "alpha > 0, x > 0, mu real", d, {"W.mellin_barnes"}, {"D.scaled"});
        mk(CaseId::COR1, "alpha > 0, x > 0", {}, {"K.cos_integral"}, {"elementary"});
        d = {};
        d.y = 0.5;
        mk(CaseId::COR2A, "alpha > 0, x > 0, y > 0", d, {"K.cos_integral"}, {"K.laplace_conv"});
        d = {};
        d.sigma = 0.3;
        mk(CaseId::COR2B, "alpha > 0, x > 0, sigma real", d, {"K.laplace_conv"},
           {"K.cosh_integral"});
        d = {};
        d.phi = 0.25 * num::pi;
        mk(CaseId::COR3A, "alpha > 0, 0 < phi < pi/2", d, {"elementary"}, {"elementary"});
        mk(CaseId::COR3B, "alpha > 0, 0 < phi < pi/2", d, {"elementary"}, {"elementary"});
        mk(CaseId::COR4, "alpha > 0, x > 0", {}, {"E1", "K.laplace_conv"}, {"erfc"});
        d = {};
        d.mu = 0.75;
        d.nu = 1.0;
        mk(CaseId::COR5, "nu > 0, mu > nu/2, alpha > 0, x > 0", d, {"Gamma.modsq", "2F1"},
           {"Gamma.real", "2F1"});
        d = {};
        d.mu = 0.75;
        mk(CaseId::COR5_2MU, "mu > 0, alpha > 0, x > 0", d, {"Gamma.modsq", "2F1"},
           {"Gamma.real", "elementary"});
        mk(CaseId::COR5_2MU1, "mu > 0, alpha > 0, x > 0", d, {"Gamma.modsq", "2F1"},
           {"Gamma.real", "elementary"});
        d = {};
        d.mu = 0.25;
        mk(CaseId::COR6, "mu < 1/2, alpha > 0, x > 0", d, {"S.widder", "K.cos_integral"},
           {"S.laplace", "Gamma.real"});
        mk(CaseId::COR7, "alpha > 0, x > 0", {}, {"K.cos_integral"}, {"erfcx"});
        mk(CaseId::COR8, "alpha > 0, x > 0 (indices fixed to -1/4, 1/4)", {},
           {"W.mellin_barnes"}, {"K.cos_integral"});
        d = {};
        d.mu = 0.25;
        mk(CaseId::COR9, "mu < 1/2, alpha > 0, x > 0", d, {"Gamma.modsq", "W.mellin_barnes"},
           {"Gamma.real", "D.scaled"});
        d = {};
        d.sigma = 1.0;
        mk(CaseId::GAMMA_LATTICE, "Re(s) > 0, alpha > 0", d, {"Gamma.modsq"},
           {"Gamma.real", "elementary"});
        d = {};
        mk(CaseId::CHAR_EVEN, "chi nonprincipal primitive even, alpha > 0, x > 0", d,
           {"W.mellin_barnes"}, {"D.scaled"});
        mk(CaseId::CHAR_ODD, "chi nonprincipal primitive odd, alpha > 0, x > 0", d,
           {"W.mellin_barnes"}, {"D.scaled"});
        d = {};
        d.mu = 0.25;
        d.xi = 1.0;
        mk(CaseId::FOURIER_PAIR_L1, "x > 0, mu real", d, {"W.mellin_barnes"}, {"D.scaled"});
        mk(CaseId::FOURIER_PAIR_C8, "x > 0 (indices fixed to -1/4, 1/4)", d,
           {"W.mellin_barnes"}, {"K.cos_integral"});
        mk(CaseId::FOURIER_PAIR_C9, "mu < 1/2, x > 0", d, {"Gamma.modsq", "W.mellin_barnes"},
           {"Gamma.real", "D.scaled"});
        return v;
    }();
    return cases;
}

std::vector<IdentityCase> default_grid()
{
    const double xs[] = {0.25, 1.0, 4.0};
    const double as[] = {0.5, 1.0, 2.0};
    const double mus[] = {-0.5, -0.25, 0.0, 0.25, 0.4};
    const double phis[] = {num::pi / 6.0, num::pi / 4.0, num::pi / 3.0};
    const double ss[] = {0.5, 1.0, 3.0};
    std::vector<IdentityCase> g;
    auto push = [&](CaseId id, LatticeCase p) {
        IdentityCase c;
        c.id = id;
        c.params = p;
        g.push_back(c);
    };
    for (double mu : mus)
        for (double a : as)
            for (double x : xs) {
                LatticeCase p;
                p.mu = mu;
                p.alpha = a;
                p.x = x;
                push(CaseId::THM1, p);
            }
    for (double a : as)
        for (double x : xs) {
            LatticeCase p;
            p.alpha = a;
            p.x = x;
            push(CaseId::COR1, p);
            LatticeCase p2 = p;
            p2.y = 0.5;
            push(CaseId::COR2A, p2);
            LatticeCase p3 = p;
            p3.sigma = 0.3;
            push(CaseId::COR2B, p3);
        }
    for (double a : as)
        for (double phi : phis) {
            LatticeCase p;
            p.alpha = a;
            p.phi = phi;
            push(CaseId::COR3A, p);
            push(CaseId::COR3B, p);
        }
    for (double a : as)
        for (double x : xs) {
            LatticeCase p;
            p.alpha = a;
            p.x = x;
            push(CaseId::COR4, p);
            LatticeCase p5 = p;
            p5.mu = 0.75;
            p5.nu = 1.0;
            push(CaseId::COR5, p5);
            LatticeCase p5m = p;
            p5m.mu = 0.75;
            push(CaseId::COR5_2MU, p5m);
            push(CaseId::COR5_2MU1, p5m);
        }
    for (double mu : mus)
        for (double a : as)
            for (double x : xs) {
                LatticeCase p;
                p.mu = mu;
                p.alpha = a;
                p.x = x;
                push(CaseId::COR6, p);
            }
    for (double a : as)
        for (double x : xs) {
            LatticeCase p;
            p.alpha = a;
            p.x = x;
            push(CaseId::COR7, p);
            push(CaseId::COR8, p);
        }
    for (double mu : mus)
        for (double a : as)
            for (double x : xs) {
                LatticeCase p;
                p.mu = mu;
                p.alpha = a;
                p.x = x;
                push(CaseId::COR9, p);
            }
    for (double s : ss)
        for (double a : as) {
            LatticeCase p;
            p.alpha = a;
            p.sigma = s;
            push(CaseId::GAMMA_LATTICE, p);
        }
    for (double x : xs) {
        LatticeCase p;
        p.x = x;
        push(CaseId::CHAR_EVEN, p);
        push(CaseId::CHAR_ODD, p);
    }
    const double xis[] = {0.0, 0.5, 1.0, 2.0};
    const double taus[] = {0.5, 2.0};
    for (CaseId id :
         {CaseId::FOURIER_PAIR_L1, CaseId::FOURIER_PAIR_C8, CaseId::FOURIER_PAIR_C9}) {
        for (double xi : xis) {
            LatticeCase p;
            p.mu = 0.25;
            p.x = 1.0;
            p.xi = xi;
            push(id, p);
        }
        for (double tau : taus) {
            LatticeCase p;
            p.mu = 0.25;
            p.x = 1.0;
            p.tau = tau;
            push(id, p);
        }
    }
    return g;
}

} // namespace ik::identities
