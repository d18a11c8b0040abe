#pragma once

// Certified summation: index-side series with geometric-type envelopes and
// cosh-side lattice series with doubly exponential decay. Every sum returns
// a rigorous tail bound derived from the caller's majorant.

#include "indexkernel/common.hpp"

#include <functional>
#include <iosfwd>
#include <vector>

namespace ik::series {

struct SeriesValue {
    double value = 0.0;
    int terms_used = 0;
    double tail_bound = 0.0;
};

struct CxSeriesValue {
    Cplx value{0.0, 0.0};
    int terms_used = 0;
    double tail_bound = 0.0;
};

// Thrown when a series hits its term cap; carries the partial sum.
class SeriesCapExceeded : public NumericalError {
public:
    SeriesCapExceeded(const std::string& what, SeriesValue partial)
        : NumericalError(what), partial_(partial)
    {
    }
    const SeriesValue& partial() const { return partial_; }

private:
    SeriesValue partial_;
};

// Sum over n >= 1 of term(n), where envelope(n) >= |term(n)| is decreasing
// with non-increasing ratio (the e^{-c n} * poly family). Stops once the
// closed-form geometric tail envelope(N+1)/(1 - r) drops below tol.
// The n = 0 term and any 2x folding belong to the caller.
SeriesValue sum_index_side(const std::function<double(int)>& term,
                           const std::function<double(int)>& envelope, double tol,
                           int n_max = 10000);

// Same contract for terms with doubly exponential decay
// (|term(n)| <= C exp(-decay * cosh(beta n)) type envelopes). Tail bound is
// 2 * envelope(N+1), valid once the envelope at least halves per step.
SeriesValue sum_cosh_side(const std::function<double(int)>& term,
                          const std::function<double(int)>& envelope, double tol, int n_max = 64);

enum class Parity { even, odd };

// Explicit Dirichlet character table chi(0..q-1).
struct CharacterSpec {
    int q = 1;
    std::vector<Cplx> values;
    Parity parity = Parity::even;
    Cplx gauss_sum{0.0, 0.0};

    Cplx chi(long n) const
    {
        long r = n % q;
        if (r < 0)
            r += q;
        return values[static_cast<size_t>(r)];
    }
    bool is_principal() const;

    // Checks total multiplicativity on units, vanishing off units, the
    // declared parity, and |G(chi)|^2 = q (primitivity); fills gauss_sum.
    static CharacterSpec make(int q, std::vector<Cplx> values, Parity parity);

    // Text format: first line "q parity", second line q comma-separated
    // complex values "re+imi".
    static CharacterSpec parse(std::istream& in);

    static const CharacterSpec& mod5_even();
    static const CharacterSpec& mod5_odd();
};

// chi-twisted sum over n >= 1 of chi(n) * term(n) (conjugated table if
// requested); envelope majorizes |term(n)| and the geometric tail rule of
// sum_index_side applies. Rejects principal characters.
CxSeriesValue sum_character(const std::function<double(int)>& term, const CharacterSpec& chi,
                            bool conjugate, const std::function<double(int)>& envelope, double tol,
                            int n_max = 10000);

} // namespace ik::series
