// Command-line front end: point evaluation of the kernels, single-identity
// verification, the full identity suite, and machine-readable reports.

#include "indexkernel/complexfn.hpp"
#include "indexkernel/identities.hpp"
#include "indexkernel/kernels.hpp"
#include "indexkernel/series.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

namespace id = ik::identities;
namespace kn = ik::kernels;
namespace cf = ik::complexfn;
namespace sr = ik::series;

namespace {

struct RunConfig {
    double tolerance = 1e-8;
    double quad_tolerance = 1e-10;
    int n_max = 10000;
    bool parallel = true;
    int jobs = 0; // 0 = hardware concurrency
    std::string format = "text";
    std::string out_path;
    std::string char_file;
    bool timings = false;
};

// exit codes: 0 pass, 1 identity failure, 2 domain/usage error, 3 numerical failure
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitDomain = 2;
constexpr int kExitNumerical = 3;

std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::map<std::string, double> parse_kv(const std::vector<std::string>& args)
{
    std::map<std::string, double> kv;
    for (const auto& a : args) {
        auto eq = a.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ik::DomainError("expected key=value, got '" + a + "'");
        const std::string key = a.substr(0, eq);
        char* end = nullptr;
        const std::string val = a.substr(eq + 1);
        double d = std::strtod(val.c_str(), &end);
        if (end == val.c_str() || *end != '\0')
            throw ik::DomainError("cannot parse numeric value in '" + a + "'");
        kv[key] = d;
    }
    return kv;
}

double need(const std::map<std::string, double>& kv, const std::string& k)
{
    auto it = kv.find(k);
    if (it == kv.end())
        throw ik::DomainError("missing required parameter " + k + "=...");
    return it->second;
}

std::optional<double> maybe(const std::map<std::string, double>& kv, const std::string& k)
{
    auto it = kv.find(k);
    if (it == kv.end())
        return std::nullopt;
    return it->second;
}

// --- report serialization ----------------------------------------------------

void params_json(std::ostream& os, const id::LatticeCase& p, const std::optional<int>& q)
{
    os << "{\"mu\":" << fmt17(p.mu) << ",\"alpha\":" << fmt17(p.alpha) << ",\"x\":" << fmt17(p.x);
    if (p.y)
        os << ",\"y\":" << fmt17(*p.y);
    if (p.sigma)
        os << ",\"sigma\":" << fmt17(*p.sigma);
    if (p.phi)
        os << ",\"phi\":" << fmt17(*p.phi);
    if (p.nu)
        os << ",\"nu\":" << fmt17(*p.nu);
    if (p.xi)
        os << ",\"xi\":" << fmt17(*p.xi);
    if (p.tau)
        os << ",\"tau\":" << fmt17(*p.tau);
    if (q)
        os << ",\"q\":" << *q;
    os << "}";
}

void report_json(std::ostream& os, const id::IdentityReport& r, bool timings)
{
    std::optional<int> q;
    if (r.kase.chi)
        q = r.kase.chi->q;
    else if (r.kase.id == id::CaseId::CHAR_EVEN || r.kase.id == id::CaseId::CHAR_ODD)
        q = 5;
    os << "{\"case\":\"" << id::case_name(r.kase.id) << "\",\"params\":";
    params_json(os, r.kase.params, q);
    os << ",\"lhs\":" << fmt17(r.lhs) << ",\"rhs\":" << fmt17(r.rhs);
    os << ",\"abs_err\":" << fmt17(r.abs_err) << ",\"rel_err\":" << fmt17(r.rel_err);
    os << ",\"lhs_tail_bound\":" << fmt17(r.lhs_tail_bound)
       << ",\"rhs_tail_bound\":" << fmt17(r.rhs_tail_bound);
    os << ",\"pass\":" << (r.pass ? "true" : "false");
    if (timings)
        os << ",\"wall_ms\":" << fmt17(r.wall_ms);
    os << "}";
}

void reports_json(std::ostream& os, const std::vector<id::IdentityReport>& rs, bool timings)
{
    os << "[\n";
    for (size_t i = 0; i < rs.size(); ++i) {
        os << "  ";
        report_json(os, rs[i], timings);
        os << (i + 1 < rs.size() ? ",\n" : "\n");
    }
    os << "]\n";
}

const char* kCsvHeader = "case,mu,alpha,x,y,sigma,phi,nu,q,xi,tau,lhs,rhs,abs_err,rel_err,"
                         "lhs_tail_bound,rhs_tail_bound,pass";

void report_csv_row(std::ostream& os, const id::IdentityReport& r)
{
    auto opt = [&](const std::optional<double>& v) { return v ? fmt17(*v) : std::string(); };
    const id::LatticeCase& p = r.kase.params;
    std::optional<int> q;
    if (r.kase.chi)
        q = r.kase.chi->q;
    else if (r.kase.id == id::CaseId::CHAR_EVEN || r.kase.id == id::CaseId::CHAR_ODD)
        q = 5;
    os << id::case_name(r.kase.id) << ',' << fmt17(p.mu) << ',' << fmt17(p.alpha) << ','
       << fmt17(p.x) << ',' << opt(p.y) << ',' << opt(p.sigma) << ',' << opt(p.phi) << ','
       << opt(p.nu) << ',' << (q ? std::to_string(*q) : std::string()) << ',' << opt(p.xi) << ','
       << opt(p.tau) << ',' << fmt17(r.lhs) << ',' << fmt17(r.rhs) << ',' << fmt17(r.abs_err)
       << ',' << fmt17(r.rel_err) << ',' << fmt17(r.lhs_tail_bound) << ','
       << fmt17(r.rhs_tail_bound) << ',' << (r.pass ? "true" : "false") << '\n';
}

std::string params_text(const id::IdentityReport& r)
{
    const id::LatticeCase& p = r.kase.params;
    std::ostringstream os;
    os << "mu=" << p.mu << " alpha=" << p.alpha << " x=" << p.x;
    if (p.y)
        os << " y=" << *p.y;
    if (p.sigma)
        os << " sigma=" << *p.sigma;
    if (p.phi)
        os << " phi=" << *p.phi;
    if (p.nu)
        os << " nu=" << *p.nu;
    if (p.xi)
        os << " xi=" << *p.xi;
    if (p.tau)
        os << " tau=" << *p.tau;
    return os.str();
}

void report_text(std::ostream& os, const id::IdentityReport& r, bool timings)
{
    os << (r.pass ? "[PASS] " : "[FAIL] ") << id::case_name(r.kase.id) << " " << params_text(r)
       << "\n       lhs=" << fmt17(r.lhs) << " rhs=" << fmt17(r.rhs)
       << " rel_err=" << fmt17(r.rel_err) << " tails=(" << fmt17(r.lhs_tail_bound) << ","
       << fmt17(r.rhs_tail_bound) << ")";
    if (timings)
        os << " wall_ms=" << r.wall_ms;
    if (!r.note.empty())
        os << "\n       note: " << r.note;
    os << "\n";
}

void emit(const std::vector<id::IdentityReport>& rs, const RunConfig& cfg)
{
    if (cfg.format == "json")
        reports_json(std::cout, rs, cfg.timings);
    else if (cfg.format == "csv") {
        std::cout << kCsvHeader << '\n';
        for (const auto& r : rs)
            report_csv_row(std::cout, r);
    } else {
        for (const auto& r : rs)
            report_text(std::cout, r, cfg.timings);
    }
    if (!cfg.out_path.empty()) {
        std::ofstream f(cfg.out_path);
        if (!f)
            throw ik::DomainError("cannot open output file " + cfg.out_path);
        reports_json(f, rs, cfg.timings);
    }
}

// --- commands ----------------------------------------------------------------

int cmd_eval(const std::string& fn, const std::map<std::string, double>& kv)
{
    auto print = [](double value, double err, const char* route) {
        std::cout << "value = " << fmt17(value) << "\n";
        std::cout << "abs_error_estimate = " << fmt17(err) << "\n";
        std::cout << "representation = " << route << "\n";
    };
    if (fn == "K") {
        const double tau = need(kv, "tau"), x = need(kv, "x");
        auto sigma = maybe(kv, "sigma");
        if (sigma) {
            ik::Cplx v = kn::macdonald_complex_order(*sigma, tau, x);
            std::cout << "value = " << fmt17(v.real()) << " + " << fmt17(v.imag()) << "i\n";
            std::cout << "representation = laplace-convolution\n";
            return kExitPass;
        }
        kn::KernelValue v = kn::macdonald_imag_detail(tau, x);
        print(v.value, v.abs_error, v.route);
    } else if (fn == "W") {
        kn::EvalPoint p{need(kv, "mu"), need(kv, "tau"), need(kv, "x")};
        kn::KernelValue v = kn::whittaker_imag_detail(p);
        print(v.value, v.abs_error, v.route);
    } else if (fn == "D") {
        kn::KernelValue v = kn::parabolic_d_detail(need(kv, "order"), need(kv, "z"));
        print(v.value, v.abs_error, v.route);
    } else if (fn == "S_weighted") {
        const double v = kn::lommel_weighted(need(kv, "mu"), need(kv, "tau"), need(kv, "x"));
        print(v, 1e-11 * std::fabs(v), "widder-transform");
    } else if (fn == "erfc") {
        const double v = cf::erfc(need(kv, "x"));
        print(v, 1e-15 * std::fabs(v), "libm");
    } else if (fn == "E1") {
        const double v = cf::exp_integral_e1(need(kv, "x"));
        print(v, 1e-13 * std::fabs(v), "libm-expint");
    } else if (fn == "gamma_abs2") {
        const double v = cf::gamma_modulus_sq(need(kv, "a"), need(kv, "tau"));
        print(v, 1e-13 * std::fabs(v), "log-gamma");
    } else if (fn == "hyp2f1") {
        ik::Cplx v = cf::hyp2f1({need(kv, "a"), maybe(kv, "a_im").value_or(0.0)},
                                {need(kv, "b"), maybe(kv, "b_im").value_or(0.0)},
                                {need(kv, "c"), maybe(kv, "c_im").value_or(0.0)}, need(kv, "z"));
        std::cout << "value = " << fmt17(v.real()) << " + " << fmt17(v.imag()) << "i\n";
        std::cout << "representation = " << (need(kv, "z") < -1.0 ? "pfaff-series" : "series")
                  << "\n";
    } else {
        throw ik::DomainError("unknown function '" + fn +
                              "' (expected K, W, D, S_weighted, erfc, E1, gamma_abs2, hyp2f1)");
    }
    return kExitPass;
}

id::IdentityCase build_case(const std::string& name, const std::map<std::string, double>& kv,
                            const RunConfig& cfg)
{
    id::IdentityCase c;
    c.id = id::case_from_name(name);
    const auto& info = id::list_cases();
    for (const auto& ci : info)
        if (ci.id == c.id)
            c.params = ci.defaults;
    if (auto v = maybe(kv, "mu"))
        c.params.mu = *v;
    if (auto v = maybe(kv, "alpha"))
        c.params.alpha = *v;
    if (auto v = maybe(kv, "x"))
        c.params.x = *v;
    if (auto v = maybe(kv, "y"))
        c.params.y = *v;
    if (auto v = maybe(kv, "sigma"))
        c.params.sigma = *v;
    if (auto v = maybe(kv, "s"))
        c.params.sigma = *v;
    if (auto v = maybe(kv, "phi"))
        c.params.phi = *v;
    if (auto v = maybe(kv, "nu"))
        c.params.nu = *v;
    if (auto v = maybe(kv, "xi"))
        c.params.xi = *v;
    if (auto v = maybe(kv, "tau"))
        c.params.tau = *v;
    if (!cfg.char_file.empty() &&
        (c.id == id::CaseId::CHAR_EVEN || c.id == id::CaseId::CHAR_ODD)) {
        std::ifstream f(cfg.char_file);
        if (!f)
            throw ik::DomainError("cannot open character file " + cfg.char_file);
        c.chi = sr::CharacterSpec::parse(f);
    }
    return c;
}

id::VerifyOptions make_opts(const RunConfig& cfg)
{
    id::VerifyOptions o;
    o.quad_tol = cfg.quad_tolerance;
    o.series_tol = std::min(1e-10, 0.01 * cfg.tolerance);
    o.n_max = cfg.n_max;
    return o;
}

int cmd_verify(const std::string& name, const std::map<std::string, double>& kv,
               const RunConfig& cfg)
{
    id::IdentityCase c = build_case(name, kv, cfg);
    id::IdentityReport r = id::verify(c, cfg.tolerance, make_opts(cfg));
    emit({r}, cfg);
    return r.pass ? kExitPass : kExitFail;
}

int cmd_suite(const RunConfig& cfg)
{
    std::vector<id::IdentityCase> grid = id::default_grid();
    if (!cfg.char_file.empty()) {
        std::ifstream f(cfg.char_file);
        if (!f)
            throw ik::DomainError("cannot open character file " + cfg.char_file);
        sr::CharacterSpec chi = sr::CharacterSpec::parse(f);
        for (auto& c : grid)
            if ((c.id == id::CaseId::CHAR_EVEN && chi.parity == sr::Parity::even) ||
                (c.id == id::CaseId::CHAR_ODD && chi.parity == sr::Parity::odd))
                c.chi = chi;
    }
    const id::VerifyOptions opts = make_opts(cfg);
    std::vector<id::IdentityReport> reports(grid.size());
    std::vector<std::string> errors(grid.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= grid.size())
                return;
            try {
                reports[i] = id::verify(grid[i], cfg.tolerance, opts);
            } catch (const std::exception& e) {
                reports[i].kase = grid[i];
                reports[i].pass = false;
                errors[i] = e.what();
            }
        }
    };
    int n_threads = 1;
    if (cfg.parallel) {
        n_threads = cfg.jobs > 0 ? cfg.jobs
                                 : static_cast<int>(std::thread::hardware_concurrency());
        n_threads = std::max(1, n_threads);
    }
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    int failures = 0;
    std::map<std::string, std::pair<int, int>> by_family; // name -> {pass, total}
    for (size_t i = 0; i < grid.size(); ++i) {
        auto& f = by_family[id::case_name(reports[i].kase.id)];
        ++f.second;
        if (reports[i].pass)
            ++f.first;
        else
            ++failures;
        if (!errors[i].empty())
            std::cerr << "[ERROR] " << id::case_name(grid[i].id) << ": " << errors[i] << "\n";
    }
    emit(reports, cfg);
    if (cfg.format == "text") {
        std::cout << "\nsummary (" << (grid.size() - failures) << "/" << grid.size()
                  << " instances pass):\n";
        for (const auto& [name, pf] : by_family)
            std::cout << "  " << name << ": " << pf.first << "/" << pf.second << "\n";
    }
    return failures == 0 ? kExitPass : kExitFail;
}

int cmd_list()
{
    for (const auto& ci : id::list_cases()) {
        std::cout << id::case_name(ci.id) << "\n  constraint: " << ci.constraint
                  << "\n  defaults: mu=" << ci.defaults.mu << " alpha=" << ci.defaults.alpha
                  << " x=" << ci.defaults.x;
        if (ci.defaults.y)
            std::cout << " y=" << *ci.defaults.y;
        if (ci.defaults.sigma)
            std::cout << " sigma=" << *ci.defaults.sigma;
        if (ci.defaults.phi)
            std::cout << " phi=" << *ci.defaults.phi;
        if (ci.defaults.nu)
            std::cout << " nu=" << *ci.defaults.nu;
        std::cout << "\n  lhs routes:";
        for (const auto& d : ci.lhs_deps)
            std::cout << " " << d;
        std::cout << "\n  rhs routes:";
        for (const auto& d : ci.rhs_deps)
            std::cout << " " << d;
        std::cout << "\n";
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv)
{
    RunConfig cfg;
    if (const char* env = std::getenv("INDEXKERNEL_TOL"))
        cfg.tolerance = std::strtod(env, nullptr);

    CLI::App app{"index-transform kernel evaluation and summation-identity verification"};
    app.require_subcommand(1);
    app.add_option("--tol", cfg.tolerance, "identity verification tolerance");
    app.add_option("--quad-tol", cfg.quad_tolerance, "kernel quadrature tolerance");
    app.add_option("--nmax", cfg.n_max, "series term cap");
    app.add_option("--format", cfg.format, "output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--parallel", cfg.parallel, "run suite cases in parallel (true|false)");
    app.add_option("--jobs", cfg.jobs, "worker count (0 = hardware)");
    app.add_option("--out", cfg.out_path, "also write a JSON report to this path");
    app.add_option("--char-file", cfg.char_file, "Dirichlet character table file");
    app.add_flag("--timings", cfg.timings, "include wall_ms in reports");

    std::string fn_name, case_name_arg;
    std::vector<std::string> kv_args;

    CLI::App* eval = app.add_subcommand("eval", "evaluate one function at a point");
    eval->add_option("function", fn_name, "K|W|D|S_weighted|erfc|E1|gamma_abs2|hyp2f1")
        ->required();
    eval->add_option("params", kv_args, "key=value parameters");

    CLI::App* verify = app.add_subcommand("verify", "verify one identity instance");
    verify->add_option("case", case_name_arg, "identity case id (see 'list')")->required();
    verify->add_option("params", kv_args, "key=value parameters");

    CLI::App* suite = app.add_subcommand("suite", "run the default verification grid");
    CLI::App* list = app.add_subcommand("list", "list registered identity cases");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitDomain;
    }

    try {
        if (eval->parsed())
            return cmd_eval(fn_name, parse_kv(kv_args));
        if (verify->parsed())
            return cmd_verify(case_name_arg, parse_kv(kv_args), cfg);
        if (suite->parsed())
            return cmd_suite(cfg);
        if (list->parsed())
            return cmd_list();
    } catch (const ik::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const ik::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitDomain;
}
