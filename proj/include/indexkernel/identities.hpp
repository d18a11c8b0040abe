#pragma once

// Registry of the verifiable summation and Fourier-transform identities:
// each case compiles to an (LHS evaluator, RHS evaluator, validity domain)
// triple whose two sides run through disjoint kernel routes, so agreement is
// evidence of correctness rather than tautology.

#include "indexkernel/common.hpp"
#include "indexkernel/kernels.hpp"
#include "indexkernel/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ik::identities {

enum class CaseId {
    THM1,
    COR1,
    COR2A,
    COR2B,
    COR3A,
    COR3B,
    COR4,
    COR5,
    COR5_2MU,
    COR5_2MU1,
    COR6,
    COR7,
    COR8,
    COR9,
    GAMMA_LATTICE,
    CHAR_EVEN,
    CHAR_ODD,
    FOURIER_PAIR_L1,
    FOURIER_PAIR_C8,
    FOURIER_PAIR_C9,
};
inline constexpr int kCaseCount = 20;

const char* case_name(CaseId id);
CaseId case_from_name(const std::string& name); // throws DomainError on unknown id

// Parameters of one identity instance. sigma doubles as the Gamma-lattice
// variable s; xi/tau select the forward/inverse direction of a Fourier pair.
struct LatticeCase {
    double mu = 0.0;
    double alpha = 1.0;
    double x = 1.0;
    std::optional<double> y;
    std::optional<double> sigma;
    std::optional<double> phi;
    std::optional<double> nu;
    std::optional<double> xi;
    std::optional<double> tau;
};

struct IdentityCase {
    CaseId id = CaseId::COR1;
    LatticeCase params;
    std::optional<series::CharacterSpec> chi;
};

struct IdentityReport {
    IdentityCase kase;
    double lhs = 0.0, rhs = 0.0;       // real parts (character cases are complex)
    double lhs_im = 0.0, rhs_im = 0.0; // imaginary parts where applicable
    double abs_err = 0.0;
    double rel_err = 0.0;
    double lhs_tail_bound = 0.0;
    double rhs_tail_bound = 0.0;
    double lhs_quad_err = 0.0; // accumulated quadrature error estimates
    double rhs_quad_err = 0.0;
    bool pass = false;
    double wall_ms = 0.0;
    std::string note;
};

struct VerifyOptions {
    double series_tol = 1e-10; // per-side truncation certificate target
    double quad_tol = 1e-10;   // kernel-level quadrature tolerance
    int n_max = 10000;
};

// Evaluates both sides through their registered disjoint paths and compares
// at the given relative tolerance (denominator max(|lhs|,|rhs|,1e-300); an
// absolute floor of 1e-12 passes doubly-underflown cases).
IdentityReport verify(const IdentityCase& c, double tol, const VerifyOptions& opt = {});

// Forward transform checked at each xi in xi_grid against the closed form,
// plus one inverse-direction round trip at tau = p.tau.
std::vector<IdentityReport> verify_fourier_pair(CaseId which, kernels::EvalPoint p,
                                                const std::vector<double>& xi_grid, double tol,
                                                const VerifyOptions& opt = {});

struct CaseInfo {
    CaseId id;
    std::string constraint;              // human-readable validity domain
    LatticeCase defaults;                // a point inside the validity domain
    std::vector<std::string> lhs_deps;   // kernel routes used by each side;
    std::vector<std::string> rhs_deps;   // registry invariant: disjoint
};

// Stable-ordered registry listing (one entry per CaseId).
const std::vector<CaseInfo>& list_cases();

// The default verification grid (the suite's instance list), stable order.
std::vector<IdentityCase> default_grid();

} // namespace ik::identities
