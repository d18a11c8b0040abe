#include "indexkernel/series.hpp"

#include "indexkernel/kernels.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

using ik::Cplx;
namespace sr = ik::series;
namespace kn = ik::kernels;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("index-side engine: degenerate and geometric series")
{
    // all-zero terms stop immediately
    sr::SeriesValue z = sr::sum_index_side([](int) { return 0.0; }, [](int) { return 0.0; }, 1e-12);
    CHECK(z.value == 0.0);
    CHECK(z.terms_used == 1);
    // geometric: sum e^{-n} = 1/(e-1)
    sr::SeriesValue g = sr::sum_index_side([](int n) { return std::exp(-n); },
                                           [](int n) { return std::exp(-n); }, 1e-12);
    CHECK(std::fabs(g.value - 1.0 / (std::exp(1.0) - 1.0)) <= g.tail_bound + 1e-15);
    CHECK(g.tail_bound <= 1e-12);
    CHECK(g.terms_used >= 1);
}

TEST_CASE("index-side engine: envelope violations and caps are reported")
{
    CHECK_THROWS_AS((void)sr::sum_index_side([](int) { return 1.0; },
                                             [](int n) { return n == 1 ? 0.5 : 0.0; }, 1e-12),
                    ik::NumericalError);
    try {
        (void)sr::sum_index_side([](int) { return 1e-3; },
                                 [](int n) { return 1e-2 / std::sqrt(n); }, 1e-12, 50);
        CHECK(false);
    } catch (const sr::SeriesCapExceeded& e) {
        CHECK(e.partial().terms_used == 50);
        CHECK(e.partial().value == doctest::Approx(50e-3));
    }
}

TEST_CASE("index-side engine: K_{i n}(1) sum against the lattice transformation")
{
    // LHS tail of the n >= 1 Macdonald index series; cross-checked against
    // the cosh-side value (pi/alpha)(e^{-x} + ...) - K_0(x) at alpha = x = 1.
    const double k0_half = kn::macdonald_imag(0.0, 0.5);
    sr::SeriesValue s = sr::sum_index_side(
        [](int n) { return 2.0 * kn::macdonald_imag(n, 1.0); },
        [&](int n) { return 2.0 * k0_half * std::exp(-kPi / 3.0 * n); }, 1e-10);
    double rhs = kPi * std::exp(-1.0);
    for (int n = 1; n <= 4; ++n)
        rhs += 2.0 * kPi * std::exp(-std::cosh(2.0 * kPi * n));
    CHECK(std::fabs(s.value + kn::macdonald_imag(0.0, 1.0) - rhs) < 1e-8);
}

TEST_CASE("cosh-side engine: brute-force agreement and underflow stop")
{
    // doubly exponential terms against a direct 64-term sum
    auto term = [](int n) { return std::exp(-std::cosh(2.0 * kPi * n / 6.0)); };
    sr::SeriesValue s = sr::sum_cosh_side(term, term, 1e-12);
    double brute = 0.0;
    for (int n = 64; n >= 1; --n)
        brute += term(n);
    CHECK(std::fabs(s.value - brute) <= s.tail_bound + 1e-16);
    // alpha small: nothing above the n = 0 term survives
    auto tiny = [](int n) { return std::exp(-std::cosh(2.0 * kPi * n / 0.5)); };
    sr::SeriesValue t = sr::sum_cosh_side(tiny, tiny, 1e-12);
    CHECK(t.value == 0.0);
    CHECK(t.tail_bound <= 1e-12);
}

TEST_CASE("engines never double-count: folded sum matches a naive two-sided oracle")
{
    // f(n) = e^{-|n|/2} cos(n) summed over n in Z, via n=0 + 2-fold engine
    auto f = [](int n) { return std::exp(-0.5 * std::fabs(n)) * std::cos(n); };
    sr::SeriesValue s = sr::sum_index_side([&](int n) { return 2.0 * f(n); },
                                           [](int n) { return 2.0 * std::exp(-0.5 * n); }, 1e-13);
    double naive = f(0);
    for (int n = 1; n <= 200; ++n)
        naive += f(n) + f(-n);
    CHECK(std::fabs(f(0) + s.value - naive) < 1e-12);
}

TEST_CASE("certificate soundness: tighter tolerance moves the value by less than the tail bound")
{
    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> uc(0.2, 2.0);
    for (int i = 0; i < 50; ++i) {
        const double c = uc(rng), a = uc(rng);
        auto term = [=](int n) { return a * std::exp(-c * n) * std::cos(0.7 * n); };
        auto env = [=](int n) { return a * std::exp(-c * n); };
        sr::SeriesValue coarse = sr::sum_index_side(term, env, 1e-6);
        sr::SeriesValue fine = sr::sum_index_side(term, env, 1e-8);
        CHECK(std::fabs(coarse.value - fine.value) <= coarse.tail_bound * (1.0 + 1e-9));
    }
}

TEST_CASE("character tables: validation, Gauss sums, parsing")
{
    const sr::CharacterSpec& even = sr::CharacterSpec::mod5_even();
    const sr::CharacterSpec& odd = sr::CharacterSpec::mod5_odd();
    CHECK(std::fabs(std::norm(even.gauss_sum) - 5.0) < 1e-12);
    CHECK(std::fabs(std::norm(odd.gauss_sum) - 5.0) < 1e-12);
    CHECK(std::fabs(even.gauss_sum.real() - std::sqrt(5.0)) < 1e-12); // real character mod 5
    CHECK(std::abs(odd.gauss_sum - Cplx(-1.1755705045849462583, 1.9021130325903071442)) < 1e-12);
    CHECK_FALSE(even.is_principal());
    // principal character is rejected by the twisted engine
    sr::CharacterSpec principal;
    principal.q = 5;
    principal.values = {Cplx(0, 0), Cplx(1, 0), Cplx(1, 0), Cplx(1, 0), Cplx(1, 0)};
    CHECK_THROWS_AS((void)sr::sum_character([](int) { return 0.0; }, principal, false,
                                            [](int) { return 0.0; }, 1e-10),
                    ik::DomainError);
    // non-multiplicative tables are rejected
    CHECK_THROWS_AS((void)sr::CharacterSpec::make(
                        5, {Cplx(0, 0), Cplx(1, 0), Cplx(1, 0), Cplx(-1, 0), Cplx(-1, 0)},
                        sr::Parity::even),
                    ik::DomainError);
    // text round trip
    std::stringstream ss("5 odd\n0+0i, 1+0i, 0+1i, 0-1i, -1+0i\n");
    sr::CharacterSpec parsed = sr::CharacterSpec::parse(ss);
    CHECK(parsed.parity == sr::Parity::odd);
    CHECK(std::abs(parsed.gauss_sum - odd.gauss_sum) < 1e-12);
}

TEST_CASE("character-twisted engine: zero terms and a chi-weighted geometric sum")
{
    const sr::CharacterSpec& even = sr::CharacterSpec::mod5_even();
    sr::CxSeriesValue z = sr::sum_character([](int) { return 0.0; }, even, false,
                                            [](int) { return 0.0; }, 1e-12);
    CHECK(std::abs(z.value) == 0.0);
    // sum chi(n) e^{-n/10} against a direct 400-term evaluation
    auto term = [](int n) { return std::exp(-0.1 * n); };
    auto env = [](int n) { return std::exp(-0.1 * n); };
    sr::CxSeriesValue s = sr::sum_character(term, even, false, env, 1e-12);
    Cplx direct(0, 0);
    for (int n = 400; n >= 1; --n)
        direct += even.chi(n) * term(n);
    CHECK(std::abs(s.value - direct) <= s.tail_bound + 1e-14);
}
