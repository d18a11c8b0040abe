#include "indexkernel/complexfn.hpp"
#include "indexkernel/quad.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using ik::Cplx;
namespace q = ik::quad;
namespace cf = ik::complexfn;

namespace {
constexpr double kPi = 3.14159265358979323846;
double rel(double a, double b) { return std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1e-300}); }
}

TEST_CASE("semi-infinite basics")
{
    q::QuadratureResult r = q::integrate_semi_infinite([](double u) { return std::exp(-u); }, 1e-12);
    CHECK(rel(r.real(), 1.0) < 1e-12);
    CHECK(r.evaluations > 0);

    r = q::integrate_semi_infinite([](double u) { return std::exp(-u) / std::sqrt(u); }, 1e-12);
    CHECK(rel(r.real(), std::sqrt(kPi)) < 1e-12);
}

TEST_CASE("semi-infinite hits the cylinder-function Laplace integral")
{
    // Int_0^inf u^{mu-1} exp(-x u^2 - y u) du at (mu, x, y) = (1, 1/2, 1)
    // equals e^{1/4} D_{-1}(1) with D_{-1}(z) = sqrt(pi/2) e^{z^2/4} erfc(z/sqrt 2).
    q::QuadratureResult r = q::integrate_semi_infinite(
        [](double u) { return std::exp(-0.5 * u * u - u); }, 1e-13);
    const double expected =
        std::exp(0.25) * std::sqrt(0.5 * kPi) * std::exp(0.25) * cf::erfc(1.0 / std::sqrt(2.0));
    CHECK(rel(r.real(), expected) < 1e-12);
}

TEST_CASE("finite adaptive basics")
{
    CHECK(rel(q::integrate_finite([](double) { return 1.0; }, 0.0, 1.0, 1e-12).real(), 1.0) <
          1e-14);
    CHECK(rel(q::integrate_finite([](double t) { return std::sin(t); }, 0.0, kPi, 1e-12).real(),
              2.0) < 1e-12);
    // Int_1^inf e^{-t}/t dt mapped through t = 1/s onto (0, 1]
    q::QuadratureResult r = q::integrate_finite(
        [](double s) { return std::exp(-1.0 / s) / s; }, 1e-12, 1.0, 1e-13);
    CHECK(rel(r.real(), cf::exp_integral_e1(1.0)) < 1e-11);
}

TEST_CASE("tanh-sinh finite endpoint singularities")
{
    // Int_0^1 log(x) dx = -1
    q::QuadratureResult r = q::tanh_sinh_finite([](double x) { return std::log(x); }, 0.0, 1.0, 1e-13);
    CHECK(rel(r.real(), -1.0) < 1e-12);
    // Int_0^1 x^{-1/2} dx = 2
    r = q::tanh_sinh_finite([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-13);
    CHECK(rel(r.real(), 2.0) < 1e-12);
}

TEST_CASE("oracle agreement battery: 20 known integrals")
{
    struct Known {
        q::QuadratureResult r;
        double exact;
    };
    std::vector<Known> v;
    auto fin = [&](auto f, double a, double b, double exact) {
        v.push_back({q::integrate_finite(f, a, b, 1e-12), exact});
    };
    auto ts = [&](auto f, double a, double b, double exact) {
        v.push_back({q::tanh_sinh_finite(f, a, b, 1e-12), exact});
    };
    auto semi = [&](auto f, double exact) {
        v.push_back({q::integrate_semi_infinite(f, 1e-12), exact});
    };
    fin([](double t) { return t * t; }, 0.0, 1.0, 1.0 / 3.0);
    fin([](double t) { return std::exp(t); }, 0.0, 1.0, std::exp(1.0) - 1.0);
    fin([](double t) { return std::cos(t); }, 0.0, 2.0, std::sin(2.0));
    fin([](double t) { return 1.0 / (1.0 + t * t); }, 0.0, 1.0, kPi / 4.0);
    fin([](double t) { return std::exp(-t * t); }, -3.0, 3.0,
        std::sqrt(kPi) * (1.0 - cf::erfc(3.0)));
    fin([](double t) { return std::sin(9.0 * t); }, 0.0, kPi, 2.0 / 9.0);
    fin([](double t) { return std::pow(t, 10.0); }, 0.0, 2.0, std::pow(2.0, 11.0) / 11.0);
    fin([](double t) { return 1.0 / t; }, 1.0, 7.0, std::log(7.0));
    fin([](double t) { return std::cosh(t); }, -1.0, 2.0, std::sinh(2.0) + std::sinh(1.0));
    fin([](double t) { return t * std::exp(-t); }, 0.0, 40.0, 1.0 - 41.0 * std::exp(-40.0));
    ts([](double t) { return std::log(t); }, 0.0, 1.0, -1.0);
    ts([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0, 2.0);
    ts([](double t) { return 1.0 / std::sqrt(t * (2.0 - t)); }, 0.0, 1.0, kPi / 2.0);
    ts([](double t) { return std::pow(t, 0.25) * std::log(t); }, 0.0, 1.0, -16.0 / 25.0);
    ts([](double t) { return std::sqrt(1.0 / std::tan(t)); }, 0.0, kPi / 2.0, kPi / std::sqrt(2.0));
    semi([](double u) { return std::exp(-u); }, 1.0);
    semi([](double u) { return std::exp(-u) / std::sqrt(u); }, std::sqrt(kPi));
    semi([](double u) { return u * u * std::exp(-u); }, 2.0);
    semi([](double u) { return std::exp(-u * u); }, 0.5 * std::sqrt(kPi));
    semi([](double u) { return 1.0 / ((1.0 + u * u) * (1.0 + u * u)); }, kPi / 4.0);
    REQUIRE(v.size() == 20);
    for (const auto& k : v) {
        CHECK(std::fabs(k.r.real() - k.exact) <= 10.0 * std::max(k.r.abs_error_estimate, 1e-15));
        CHECK(rel(k.r.real(), k.exact) < 1e-11);
    }
}

TEST_CASE("linearity on random smooth pairs")
{
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int i = 0; i < 12; ++i) {
        const double a = coef(rng), b = coef(rng), w1 = 0.5 + std::fabs(coef(rng)),
                     w2 = 0.5 + std::fabs(coef(rng));
        auto f = [=](double u) { return std::exp(-w1 * u); };
        auto g = [=](double u) { return std::exp(-w2 * u * u); };
        auto h = [=](double u) { return a * f(u) + b * g(u); };
        q::QuadratureResult rf = q::integrate_semi_infinite(f, 1e-12);
        q::QuadratureResult rg = q::integrate_semi_infinite(g, 1e-12);
        q::QuadratureResult rh = q::integrate_semi_infinite(h, 1e-12);
        const double budget = std::fabs(a) * rf.abs_error_estimate +
                              std::fabs(b) * rg.abs_error_estimate + rh.abs_error_estimate;
        CHECK(std::fabs(rh.real() - (a * rf.real() + b * rg.real())) <=
              std::max(10.0 * budget, 1e-13));
    }
}

TEST_CASE("non-convergence raises a diagnostic error")
{
    // oscillation with no decay cannot satisfy the level-doubling criterion
    CHECK_THROWS_AS((void)q::integrate_semi_infinite(
                        [](double u) { return std::cos(3.0 * u) + 1e-4 * std::exp(-u); }, 1e-12),
                    ik::NumericalError);
}

TEST_CASE("line integral: Gamma(s+1/2)^2 at x = 1 against doubled-cap oracle")
{
    auto f = [](Cplx s) { return std::exp(2.0 * cf::log_gamma(s + Cplx(0.5, 0.0))); };
    const double p = 2.0 * 1.0 + 1.0;
    q::LineSpec spec{1.0, q::solve_t_cap(p, kPi, 1e-15), kPi, p};
    q::QuadratureResult r = q::integrate_line(f, spec, 1e-12, 1e-14);
    q::LineSpec spec2{1.0, 2.0 * spec.t_cap, kPi, p};
    q::QuadratureResult oracle = q::integrate_line(f, spec2, 1e-14, 1e-16);
    CHECK(std::fabs(r.real() - oracle.real()) <= 10.0 * r.abs_error_estimate);
    CHECK(rel(r.real(), oracle.real()) < 1e-11);
    // the same contour evaluates the Mellin inversion of 2 K_0(2 sqrt(u)) at 1
    CHECK(rel(r.real(), 0.22778774549906687131) < 1e-10);
    CHECK(std::fabs(r.value.imag()) < 1e-12);
}

TEST_CASE("line integral decay-model violation is detected")
{
    auto f = [](Cplx s) { return Cplx(std::cosh(0.3 * s.imag()), 0.0); }; // growing tail
    q::LineSpec spec{1.0, 30.0, kPi / 2.0, 1.0};
    CHECK_THROWS_AS((void)q::integrate_line(f, spec, 1e-10, 0.0), ik::NumericalError);
}

TEST_CASE("solve_t_cap honors the decay model")
{
    const double t = q::solve_t_cap(3.0, kPi / 2.0, 1e-12);
    CHECK(std::pow(t, 3.0) * std::exp(-kPi / 2.0 * t) <= 1e-12 * 1.0001);
    CHECK(t < 80.0);
}
