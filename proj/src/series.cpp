#include "indexkernel/series.hpp"

#include <cmath>
#include <istream>
#include <numeric>
#include <sstream>

namespace ik::series {

namespace {

void check_dominance(double t, double env, int n, const char* who)
{
    if (std::fabs(t) > env * (1.0 + 1e-6) + 1e-300)
        throw NumericalError(std::string(who) + ": term exceeds its envelope at n = " +
                             std::to_string(n) + " (|term| = " + std::to_string(std::fabs(t)) +
                             ", envelope = " + std::to_string(env) + ")");
}

} // namespace

SeriesValue sum_index_side(const std::function<double(int)>& term,
                           const std::function<double(int)>& envelope, double tol, int n_max)
{
    double sum = 0.0, comp = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const double env_n = envelope(n);
        double t;
        if (env_n == 0.0) {
            t = 0.0; // majorant vanishes; term must too
        } else {
            t = term(n);
            check_dominance(t, env_n, n, "sum_index_side");
        }
        double y = t - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        const double e1 = envelope(n + 1);
        if (e1 <= 1e-320)
            return {sum, n, 2.0 * e1};
        const double r = envelope(n + 2) / e1;
        if (r < 0.9995) {
            const double tail = e1 / (1.0 - r);
            if (tail <= tol)
                return {sum, n, tail};
        }
    }
    throw SeriesCapExceeded("sum_index_side: term cap exceeded", {sum, n_max, envelope(n_max + 1)});
}

SeriesValue sum_cosh_side(const std::function<double(int)>& term,
                          const std::function<double(int)>& envelope, double tol, int n_max)
{
    double sum = 0.0, comp = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const double env_n = envelope(n);
        double t;
        if (env_n == 0.0) {
            t = 0.0;
        } else {
            t = term(n);
            check_dominance(t, env_n, n, "sum_cosh_side");
        }
        double y = t - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        const double e1 = envelope(n + 1);
        if (e1 <= 1e-320)
            return {sum, n, 2.0 * e1};
        // Tail dominated by a ratio-1/2 geometric series once the envelope
        // halves per step (cosh growth makes the ratio keep shrinking).
        if (2.0 * e1 <= tol && envelope(n + 2) <= 0.5 * e1)
            return {sum, n, 2.0 * e1};
    }
    throw SeriesCapExceeded("sum_cosh_side: term cap exceeded", {sum, n_max, envelope(n_max + 1)});
}

bool CharacterSpec::is_principal() const
{
    for (int r = 1; r < q; ++r)
        if (std::gcd(r, q) == 1 && std::abs(values[static_cast<size_t>(r)] - Cplx(1.0, 0.0)) > 1e-12)
            return false;
    return true;
}

CharacterSpec CharacterSpec::make(int q, std::vector<Cplx> values, Parity parity)
{
    if (q < 2)
        throw DomainError("CharacterSpec: modulus must be >= 2");
    if (static_cast<int>(values.size()) != q)
        throw DomainError("CharacterSpec: need exactly q values chi(0..q-1)");
    CharacterSpec c;
    c.q = q;
    c.values = std::move(values);
    c.parity = parity;
    for (int r = 0; r < q; ++r) {
        const bool unit = std::gcd(r, q) == 1;
        const double mag = std::abs(c.values[static_cast<size_t>(r)]);
        if (unit && std::fabs(mag - 1.0) > 1e-12)
            throw DomainError("CharacterSpec: |chi(r)| != 1 on a unit r = " + std::to_string(r));
        if (!unit && mag > 1e-12)
            throw DomainError("CharacterSpec: chi(r) != 0 at gcd(r,q) > 1, r = " + std::to_string(r));
    }
    for (int a = 1; a < q; ++a)
        for (int b = a; b < q; ++b)
            if (std::gcd(a, q) == 1 && std::gcd(b, q) == 1 &&
                std::abs(c.chi(static_cast<long>(a) * b) - c.values[a] * c.values[b]) > 1e-12)
                throw DomainError("CharacterSpec: table is not totally multiplicative");
    const Cplx at_minus1 = c.values[static_cast<size_t>(q - 1)];
    const Cplx want = parity == Parity::even ? Cplx(1.0, 0.0) : Cplx(-1.0, 0.0);
    if (std::abs(at_minus1 - want) > 1e-12)
        throw DomainError("CharacterSpec: chi(-1) does not match the declared parity");
    Cplx g(0.0, 0.0);
    for (int r = 1; r < q; ++r)
        g += c.values[static_cast<size_t>(r)] *
             std::exp(Cplx(0.0, 2.0 * num::pi * r / static_cast<double>(q)));
    c.gauss_sum = g;
    if (!c.is_principal() && std::fabs(std::norm(g) - q) > 1e-9 * q)
        throw DomainError("CharacterSpec: |G(chi)|^2 != q (character not primitive?)");
    return c;
}

namespace {

Cplx parse_complex_token(const std::string& tok)
{
    double re = 0.0, im = 0.0;
    char tail = 0;
    if (std::sscanf(tok.c_str(), "%lf%lf%c", &re, &im, &tail) == 3 && tail == 'i')
        return {re, im};
    if (std::sscanf(tok.c_str(), "%lf", &re) == 1)
        return {re, 0.0};
    throw DomainError("CharacterSpec: cannot parse complex value '" + tok + "'");
}

} // namespace

CharacterSpec CharacterSpec::parse(std::istream& in)
{
    int q = 0;
    std::string parity_word;
    if (!(in >> q >> parity_word))
        throw DomainError("CharacterSpec: expected header line 'q parity'");
    Parity parity;
    if (parity_word == "even")
        parity = Parity::even;
    else if (parity_word == "odd")
        parity = Parity::odd;
    else
        throw DomainError("CharacterSpec: parity must be 'even' or 'odd'");
    std::string line;
    std::getline(in, line); // rest of header line
    if (!std::getline(in, line))
        throw DomainError("CharacterSpec: expected a value line");
    std::vector<Cplx> values;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t'))
            tok.erase(tok.begin());
        while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\r'))
            tok.pop_back();
        if (!tok.empty())
            values.push_back(parse_complex_token(tok));
    }
    return make(q, std::move(values), parity);
}

const CharacterSpec& CharacterSpec::mod5_even()
{
    // Legendre symbol mod 5 (quadratic residues 1, 4).
    static const CharacterSpec c =
        make(5, {Cplx(0, 0), Cplx(1, 0), Cplx(-1, 0), Cplx(-1, 0), Cplx(1, 0)}, Parity::even);
    return c;
}

const CharacterSpec& CharacterSpec::mod5_odd()
{
    // chi(2) = i on the generator 2 of (Z/5Z)*.
    static const CharacterSpec c =
        make(5, {Cplx(0, 0), Cplx(1, 0), Cplx(0, 1), Cplx(0, -1), Cplx(-1, 0)}, Parity::odd);
    return c;
}

CxSeriesValue sum_character(const std::function<double(int)>& term, const CharacterSpec& chi,
                            bool conjugate, const std::function<double(int)>& envelope, double tol,
                            int n_max)
{
    if (chi.is_principal())
        throw DomainError("sum_character: principal characters are not admissible");
    Cplx sum(0.0, 0.0);
    for (int n = 1; n <= n_max; ++n) {
        Cplx w = chi.chi(n);
        if (conjugate)
            w = std::conj(w);
        const double env_n = envelope(n);
        if (std::abs(w) > 1e-14 && env_n > 0.0) {
            const double t = term(n);
            check_dominance(t, env_n, n, "sum_character");
            sum += w * t;
        }
        const double e1 = envelope(n + 1);
        if (e1 <= 1e-320)
            return {sum, n, 2.0 * e1};
        const double r = envelope(n + 2) / e1;
        if (r < 0.9995) {
            const double tail = e1 / (1.0 - r);
            if (tail <= tol)
                return {sum, n, tail};
        }
    }
    throw SeriesCapExceeded("sum_character: term cap exceeded",
                            {sum.real(), n_max, envelope(n_max + 1)});
}

} // namespace ik::series
