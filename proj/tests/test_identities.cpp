#include "indexkernel/identities.hpp"

#include "indexkernel/complexfn.hpp"
#include "indexkernel/kernels.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using ik::Cplx;
namespace id = ik::identities;
namespace cf = ik::complexfn;
namespace kn = ik::kernels;

namespace {
constexpr double kPi = 3.14159265358979323846;

id::IdentityCase make(id::CaseId cid, double mu, double alpha, double x)
{
    id::IdentityCase c;
    c.id = cid;
    c.params.mu = mu;
    c.params.alpha = alpha;
    c.params.x = x;
    return c;
}
}

TEST_CASE("registry lists 20 cases with disjoint kernel routes")
{
    const auto& cases = id::list_cases();
    CHECK(cases.size() == 20);
    std::set<std::string> names;
    for (const auto& ci : cases)
        names.insert(id::case_name(ci.id));
    CHECK(names.size() == 20);
    // constraints carried verbatim for the documented cases
    for (const auto& ci : cases) {
        if (ci.id == id::CaseId::COR6 || ci.id == id::CaseId::COR9)
            CHECK(ci.constraint.find("mu < 1/2") != std::string::npos);
        if (ci.id == id::CaseId::COR5)
            CHECK(ci.constraint.find("mu > nu/2") != std::string::npos);
        // disjoint-path rule on kernel routes (K./W./D./S. tags)
        auto is_kernel = [](const std::string& s) {
            return s.rfind("K.", 0) == 0 || s.rfind("W.", 0) == 0 || s.rfind("D.", 0) == 0 ||
                   s.rfind("S.", 0) == 0;
        };
        for (const auto& l : ci.lhs_deps)
            if (is_kernel(l))
                CHECK(std::find(ci.rhs_deps.begin(), ci.rhs_deps.end(), l) == ci.rhs_deps.end());
    }
}

TEST_CASE("COR1 at (1,1): both sides, and the RHS is nearly pi/e")
{
    id::IdentityReport r = id::verify(make(id::CaseId::COR1, 0.0, 1.0, 1.0), 1e-8);
    CHECK(r.pass);
    CHECK(r.rel_err < 1e-9);
    // cosh(2 pi) =~ 267.7 makes every n >= 1 lattice term vanish in binary64
    CHECK(std::fabs(r.rhs - kPi / std::exp(1.0)) < 1e-100);
    CHECK(r.lhs_tail_bound <= 1e-10);
    CHECK(r.rhs_tail_bound <= 1e-10);
}

TEST_CASE("THM1 at mu = 0 degenerates to COR1 after the Macdonald rescaling")
{
    for (double x : {0.25, 1.0})
        for (double a : {0.5, 1.0, 2.0}) {
            id::IdentityReport t = id::verify(make(id::CaseId::THM1, 0.0, a, 2.0 * x), 1e-8);
            id::IdentityReport c = id::verify(make(id::CaseId::COR1, 0.0, a, x), 1e-8);
            CHECK(t.pass);
            CHECK(c.pass);
            const double scale = std::sqrt(2.0 * x / kPi);
            CHECK(std::fabs(t.lhs - scale * c.lhs) < 1e-10 * std::max(1.0, std::fabs(t.lhs)));
            CHECK(std::fabs(t.rhs - scale * c.rhs) < 1e-10 * std::max(1.0, std::fabs(t.rhs)));
        }
}

TEST_CASE("COR3A at (1, pi/4) against 200-term direct sums of both sides")
{
    id::IdentityCase c;
    c.id = id::CaseId::COR3A;
    c.params.alpha = 1.0;
    c.params.phi = kPi / 4.0;
    id::IdentityReport r = id::verify(c, 1e-8);
    CHECK(r.pass);
    double lhs = 2.0 * (kPi / 4.0) / kPi;
    double rhs = 2.0 * std::sin(kPi / 4.0) / std::cos(kPi / 4.0);
    const double s2 = 0.5; // sin^2(pi/4)
    for (int n = 200; n >= 1; --n) {
        lhs += 2.0 * std::sinh(kPi / 4.0 * n) / std::sinh(kPi / 2.0 * n);
        const double ch = std::cosh(2.0 * kPi * n);
        rhs += 2.0 * std::sin(kPi / 2.0) / (ch * ch - s2);
    }
    CHECK(std::fabs(r.lhs - lhs) < 1e-10);
    CHECK(std::fabs(r.rhs - rhs) < 1e-10);
}

TEST_CASE("COR4 limit: W_{-1/2,0}(x) closed form matches the tau -> 0 extrapolation")
{
    for (double x : {0.5, 1.0, 2.0}) {
        const double closed = std::sqrt(x) * cf::exp_integral_e1(x) * std::exp(0.5 * x);
        const double w2 =
            kn::whittaker_route(-0.5, 1e-2, x, kn::WhittakerRoute::mellin_barnes).value;
        const double w3 =
            kn::whittaker_route(-0.5, 1e-3, x, kn::WhittakerRoute::mellin_barnes).value;
        // Richardson in tau^2 from tau = 1e-2, 1e-3
        const double extrap = w3 + (w3 - w2) / 99.0;
        CHECK(std::fabs(extrap - closed) / closed < 1e-5);
    }
}

TEST_CASE("GAMMA_LATTICE is real and positive over the s, alpha grid")
{
    for (double s : {0.5, 1.0, 3.0})
        for (double a : {0.5, 1.0, 2.0}) {
            id::IdentityCase c;
            c.id = id::CaseId::GAMMA_LATTICE;
            c.params.alpha = a;
            c.params.sigma = s;
            id::IdentityReport r = id::verify(c, 1e-8);
            CHECK(r.pass);
            CHECK(r.lhs > 0.0);
            CHECK(r.rhs > 0.0);
            CHECK(r.lhs_im == 0.0);
        }
}

TEST_CASE("domain violations name the constraint and are typed")
{
    id::IdentityCase c = make(id::CaseId::COR6, 0.8, 1.0, 1.0);
    CHECK_THROWS_WITH_AS((void)id::verify(c, 1e-8), doctest::Contains("mu < 1/2"),
                         ik::DomainError);
    c = make(id::CaseId::COR5, 0.3, 1.0, 1.0);
    c.params.nu = 1.0;
    CHECK_THROWS_WITH_AS((void)id::verify(c, 1e-8), doctest::Contains("mu > nu/2"),
                         ik::DomainError);
    c = make(id::CaseId::COR3A, 0.0, 1.0, 1.0);
    c.params.phi = 2.0;
    CHECK_THROWS_AS((void)id::verify(c, 1e-8), ik::DomainError);
}

TEST_CASE("character identities at (mu, alpha, x, q) = (0, 1, 1, 5)")
{
    id::IdentityReport e = id::verify(make(id::CaseId::CHAR_EVEN, 0.0, 1.0, 1.0), 1e-8);
    CHECK(e.pass);
    CHECK(e.rel_err < 1e-8);
    id::IdentityReport o = id::verify(make(id::CaseId::CHAR_ODD, 0.0, 1.0, 1.0), 1e-8);
    CHECK(o.pass);
    CHECK(o.rel_err < 1e-8);
    // the odd case genuinely exercises the complex path
    CHECK(std::fabs(o.lhs_im) + std::fabs(o.lhs) > 0.0);
}

TEST_CASE("one instance of each corollary family verifies at defaults")
{
    for (id::CaseId cid :
         {id::CaseId::COR2A, id::CaseId::COR2B, id::CaseId::COR4, id::CaseId::COR5,
          id::CaseId::COR5_2MU, id::CaseId::COR5_2MU1, id::CaseId::COR6, id::CaseId::COR7,
          id::CaseId::COR8, id::CaseId::COR9}) {
        id::IdentityCase c;
        c.id = cid;
        for (const auto& ci : id::list_cases())
            if (ci.id == cid)
                c.params = ci.defaults;
        id::IdentityReport r = id::verify(c, 1e-8);
        INFO(id::case_name(cid));
        CHECK(r.pass);
    }
}

TEST_CASE("fourier pair forward + inverse at defaults")
{
    for (id::CaseId cid : {id::CaseId::FOURIER_PAIR_L1, id::CaseId::FOURIER_PAIR_C8,
                           id::CaseId::FOURIER_PAIR_C9}) {
        kn::EvalPoint p{0.25, 2.0, 1.0};
        auto reports = id::verify_fourier_pair(cid, p, {0.0, 1.0}, 1e-7);
        CHECK(reports.size() == 3);
        for (const auto& r : reports) {
            INFO(id::case_name(cid), " ", r.note);
            CHECK(r.pass);
        }
    }
    // C9 enforces mu < 1/2
    CHECK_THROWS_AS((void)id::verify_fourier_pair(id::CaseId::FOURIER_PAIR_C9,
                                                  kn::EvalPoint{0.75, 1.0, 1.0}, {0.0}, 1e-7),
                    ik::DomainError);
}

TEST_CASE("default grid instance counts")
{
    auto grid = id::default_grid();
    CHECK(grid.size() > 200);
    std::set<std::string> families;
    for (const auto& c : grid)
        families.insert(id::case_name(c.id));
    CHECK(families.size() == 20);
}
