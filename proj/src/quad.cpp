#include "indexkernel/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace ik::quad {

namespace {

constexpr int kMaxLevel = 12;
constexpr double kTMax = 7.5; // DE weights underflow past this for our maps

template <typename V> double vnorm(V x) { return std::abs(x); }

// --- double-exponential driver -------------------------------------------
//
// map(t, x, w) produces abscissa and weight for the transform parameter t
// (returns false once the node degenerates in binary64). Trapezoid sums with
// level doubling: only the new odd-index nodes are evaluated per level.

struct ExpSinhMap {
    // (0, inf): x = exp((pi/2) sinh t)
    bool operator()(double t, double& x, double& w) const
    {
        const double s = 0.5 * num::pi * std::sinh(t);
        if (s > num::exp_overflow)
            return false;
        x = std::exp(s);
        if (x == 0.0)
            return false;
        w = x * 0.5 * num::pi * std::cosh(t);
        return std::isfinite(w) && w > 0.0;
    }
};

struct TanhSinhMap {
    // [a, b]: x = c + r tanh((pi/2) sinh t); nodes stored as offsets from
    // the nearer endpoint so deep nodes keep precision next to singularities.
    double a, b;
    bool operator()(double t, double& x, double& w) const
    {
        const double r = 0.5 * (b - a);
        const double s = 0.5 * num::pi * std::sinh(t);
        const double cs = std::cosh(s);
        w = r * 0.5 * num::pi * std::cosh(t) / (cs * cs);
        const double d = 2.0 * r / (1.0 + std::exp(2.0 * std::fabs(s)));
        if (d <= 0.0 || w <= 0.0 || !std::isfinite(w))
            return false;
        x = (t >= 0.0) ? b - d : a + d;
        return x != a && x != b; // f is never evaluated at the endpoints
    }
};

template <typename V, typename Map, typename F>
QuadratureResult de_run(const Map& map, const F& f, double tol, double abs_tol, const char* what)
{
    long evals = 0;
    double peak = 0.0;
    double abs_wsum = 0.0; // sum of |w f| over all nodes, units of current spacing

    // Sum of w*f over nodes with spacing h; odd_only restricts to the nodes
    // new at this level. Scans outward until contributions are negligible.
    auto eval_node = [&](double t, V& s) -> double {
        double x, w;
        if (!map(t, x, w))
            return -1.0; // node degenerated
        ++evals;
        V contrib = w * f(x);
        double mag = vnorm(contrib);
        if (!std::isfinite(mag))
            throw NumericalError(std::string(what) + ": non-finite integrand value");
        s += contrib;
        abs_wsum += mag;
        peak = std::max(peak, mag);
        return mag;
    };
    auto scan = [&](double h, bool odd_only) -> V {
        V s{};
        if (!odd_only) {
            if (eval_node(0.0, s) < 0.0)
                throw NumericalError(std::string(what) + ": degenerate center node");
        }
        const int start = odd_only ? 1 : 1;
        const int step = odd_only ? 2 : 1;
        for (int dir = 0; dir < 2; ++dir) {
            const double sign = dir == 0 ? 1.0 : -1.0;
            int consecutive_small = 0;
            for (int k = start; k * h <= kTMax; k += step) {
                double mag = eval_node(sign * k * h, s);
                if (mag < 0.0)
                    break;
                if (mag <= 1e-19 * (peak + 1e-300)) {
                    if (++consecutive_small >= 4 && k * h > 3.0)
                        break;
                } else {
                    consecutive_small = 0;
                }
            }
        }
        return s;
    };

    double h = 1.0;
    V wsum = scan(h, false);
    V prev = h * wsum;
    double estimate = std::numeric_limits<double>::infinity();

    for (int level = 1; level <= kMaxLevel; ++level) {
        h *= 0.5;
        wsum += scan(h, true);
        V integral = h * wsum;
        const double diff = vnorm(integral - prev);
        // roundoff floor: accumulated |w f| governs the summation noise
        const double floor = 4e-16 * std::max(vnorm(integral), h * abs_wsum);
        estimate = std::min(estimate, std::max(diff, floor));
        if (level >= 2 && diff <= std::max({tol * vnorm(integral), abs_tol, floor}))
            return {Cplx(integral), estimate, evals};
        prev = integral;
    }
    throw NumericalError(std::string(what) + ": no convergence after level " +
                         std::to_string(kMaxLevel) + " (last two levels differ by " +
                         std::to_string(estimate) + " at value " + std::to_string(vnorm(prev)) +
                         ")");
}

} // namespace

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f, double tol,
                                         double abs_tol)
{
    return de_run<double>(ExpSinhMap{}, f, tol, abs_tol, "integrate_semi_infinite");
}

QuadratureResult integrate_semi_infinite_cx(const std::function<Cplx(double)>& f, double tol,
                                            double abs_tol)
{
    return de_run<Cplx>(ExpSinhMap{}, f, tol, abs_tol, "integrate_semi_infinite");
}

QuadratureResult tanh_sinh_finite(const std::function<double(double)>& f, double a, double b,
                                  double tol, double abs_tol)
{
    if (!(b > a))
        throw DomainError("tanh_sinh_finite: requires b > a");
    return de_run<double>(TanhSinhMap{a, b}, f, tol, abs_tol, "tanh_sinh_finite");
}

// --- adaptive Gauss-Kronrod 15(7) ----------------------------------------

namespace {

// QUADPACK dqk15 nodes and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <typename V, typename F>
void gk15(const F& f, double a, double b, V& integral, double& err, long& evals)
{
    const double c = 0.5 * (a + b), r = 0.5 * (b - a);
    V ik{}, ig{};
    for (int j = 0; j < 7; ++j) {
        V f1 = f(c - r * kXgk[j]);
        V f2 = f(c + r * kXgk[j]);
        evals += 2;
        ik += kWgk[j] * (f1 + f2);
        if (j % 2 == 1)
            ig += kWg[j / 2] * (f1 + f2);
    }
    V fc = f(c);
    ++evals;
    ik += kWgk[7] * fc;
    ig += kWg[3] * fc;
    integral = r * ik;
    err = vnorm(r * (ik - ig));
}

template <typename V, typename F>
QuadratureResult gk_adaptive(const F& f, double a, double b, double tol, double abs_tol,
                             const char* what)
{
    struct Panel {
        double err;
        double a, b;
        V integral;
        bool operator<(const Panel& o) const
        {
            if (err != o.err)
                return err < o.err;
            return a > o.a; // deterministic tie-break
        }
    };
    long evals = 0;
    std::priority_queue<Panel> q;
    V total{};
    double total_err = 0.0;
    {
        V i0;
        double e0;
        gk15<V>(f, a, b, i0, e0, evals);
        if (!std::isfinite(vnorm(i0)))
            throw NumericalError(std::string(what) + ": non-finite integrand value");
        q.push(Panel{e0, a, b, i0});
        total = i0;
        total_err = e0;
    }
    const int max_panels = 8000;
    int panels = 1;
    while (total_err > std::max({tol * vnorm(total), abs_tol, 1e-305})) {
        if (panels >= max_panels)
            throw NumericalError(std::string(what) + ": max panel count exceeded");
        Panel p = q.top();
        q.pop();
        if (p.b - p.a <= 16.0 * 2.2e-16 * (std::fabs(p.a) + std::fabs(p.b) + 1.0)) {
            // Cannot be refined further; accept its error contribution.
            // Re-queue with zero error so it is never picked again.
            q.push(Panel{0.0, p.a, p.b, p.integral});
            total_err -= p.err;
            if (p.err == 0.0)
                throw NumericalError(std::string(what) + ": max bisection depth exceeded");
            continue;
        }
        const double m = 0.5 * (p.a + p.b);
        V i1, i2;
        double e1, e2;
        gk15<V>(f, p.a, m, i1, e1, evals);
        gk15<V>(f, m, p.b, i2, e2, evals);
        if (!std::isfinite(vnorm(i1)) || !std::isfinite(vnorm(i2)))
            throw NumericalError(std::string(what) + ": non-finite integrand value");
        total += i1 + i2 - p.integral;
        total_err += e1 + e2 - p.err;
        q.push(Panel{e1, p.a, m, i1});
        q.push(Panel{e2, m, p.b, i2});
        ++panels;
    }
    return {Cplx(total), std::max(total_err, 1e-300), evals};
}

} // namespace

QuadratureResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                                  double tol, double abs_tol)
{
    if (!(b > a))
        throw DomainError("integrate_finite: requires b > a");
    return gk_adaptive<double>(f, a, b, tol, abs_tol, "integrate_finite");
}

QuadratureResult integrate_finite_cx(const std::function<Cplx(double)>& f, double a, double b,
                                     double tol, double abs_tol)
{
    if (!(b > a))
        throw DomainError("integrate_finite: requires b > a");
    return gk_adaptive<Cplx>(f, a, b, tol, abs_tol, "integrate_finite");
}

QuadratureResult integrate_line(const std::function<Cplx(Cplx)>& f, const LineSpec& spec,
                                double tol, double abs_tol)
{
    if (!(spec.t_cap > 0.0) || !(spec.decay_rate > 0.0))
        throw DomainError("integrate_line: t_cap and decay_rate must be positive");
    auto g = [&](double t) { return f(Cplx(spec.sigma, t)); };
    QuadratureResult r = gk_adaptive<Cplx>(g, -spec.t_cap, spec.t_cap, tol,
                                           abs_tol * 2.0 * num::pi, "integrate_line");

    // Residual beyond t_cap: fit the amplitude of the decay model
    // A * t^p * exp(-rate*t) at the cap and integrate the model's tail.
    const double T = spec.t_cap, p = spec.poly_power, rate = spec.decay_rate;
    double m0 = 0.0, m1 = 0.0, m2 = 0.0;
    for (double s : {-1.0, 1.0}) {
        m0 = std::max(m0, std::abs(f(Cplx(spec.sigma, s * 0.85 * T))));
        m1 = std::max(m1, std::abs(f(Cplx(spec.sigma, s * 0.925 * T))));
        m2 = std::max(m2, std::abs(f(Cplx(spec.sigma, s * T))));
    }
    r.evaluations += 6;
    if (!(m1 <= 1.25 * (m0 + 1e-300) && m2 <= 1.25 * (m1 + 1e-300)))
        throw NumericalError("integrate_line: tail samples not decreasing (decay-model violation)");
    const double denom = std::pow(T, p) * std::exp(-rate * T);
    const double amp = denom > 0.0 ? m2 / denom : 0.0;
    // Int_T^inf t^p e^{-rate t} dt <= T^p e^{-rate T} / (rate (1 - p/(rate T)))
    double tail;
    if (rate * T > 2.0 * std::max(p, 1.0))
        tail = 2.0 * amp * denom / (rate * (1.0 - p / (rate * T)));
    else
        tail = 2.0 * amp * denom * T; // caps are normally chosen past the turnover
    r.value /= 2.0 * num::pi;
    r.abs_error_estimate = (r.abs_error_estimate + tail) / (2.0 * num::pi);
    return r;
}

double solve_t_cap(double poly_power, double decay_rate, double target)
{
    if (!(target > 0.0))
        throw DomainError("solve_t_cap: target must be positive");
    double t = std::max(10.0, 2.0 * poly_power / decay_rate + 5.0);
    for (int i = 0; i < 60; ++i) {
        double next = (poly_power * std::log(std::max(t, 2.0)) - std::log(target)) / decay_rate;
        next = std::max(next, 2.0 * std::max(poly_power, 1.0) / decay_rate + 5.0);
        if (std::fabs(next - t) < 1e-9 * t)
            return next;
        t = next;
    }
    return t;
}

} // namespace ik::quad
