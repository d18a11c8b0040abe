#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace ik {

using Cplx = std::complex<double>;

// Parameter outside an operation's validity domain. The message names the
// violated constraint; the CLI maps this to exit code 2.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Quadrature non-convergence, route disagreement, overflow and the like.
// The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

namespace num {
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double sqrt_pi = 1.77245385090551602730;
inline constexpr double sqrt_2 = 1.41421356237309504880;
// exp(x) underflows to subnormal around x = -708; keep a margin.
inline constexpr double exp_underflow = -700.0;
inline constexpr double exp_overflow = 709.0;
}

} // namespace ik
