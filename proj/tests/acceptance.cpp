// Acceptance run: one PASS/FAIL line per criterion, then a summary.
// Usage: acceptance [path-to-asianq-cli]
//
// Exit status is 0 when every failing criterion is one of the documented
// unattainable ones (see README, "Known deviations") and its failure has the
// documented cause; any other failure exits 1.

#include "asianq/cases.hpp"
#include "asianq/identities.hpp"
#include "asianq/mc.hpp"
#include "asianq/pricer.hpp"
#include "asianq/quadrature.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

using namespace asianq;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Outcome {
    bool pass = false;
    bool documented = false;  // fails only for the documented reason
    std::string detail;
};

int failures = 0, documented_failures = 0;

void report(int id, const char* title, const Outcome& o) {
    const char* tag = o.pass ? "PASS" : (o.documented ? "FAIL (documented)" : "FAIL");
    std::printf("AC%-2d %s  %s: %s\n", id, tag, title, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) (o.documented ? documented_failures : failures)++;
}

void info(const std::string& s) {
    std::printf("     info: %s\n", s.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::string run_capture(const std::string& cmd) {
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) return "<popen failed>";
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
    return out;
}

// names whose printed form is known not to hold; the corrected forms must pass
const std::set<std::string> false_as_printed = {
    "mixed_kp_integral", "mixed_wk_integral", "cosine_transform", "power_expansion",
    "yor_eigenfunction", "whittaker_addition", "bessel_poly_orthogonality"};

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const auto start = clock_type::now();

    // AC1
    {
        const auto t0 = clock_type::now();
        const PriceResult r = price(case_params(2), Method::laguerre, 64);
        const double dt = seconds_since(t0);
        Outcome o;
        o.pass = std::abs(r.call - 0.2183875466) < 1e-6 && std::abs(r.put - 0.0585969851) < 1e-6 && dt < 2.0;
        o.detail = fmt("call %.10f put %.10f, %.2f s", r.call, r.put, dt);
        report(1, "case 2 reproduction", o);
    }

    // AC2
    {
        const auto t0 = clock_type::now();
        const PriceResult r = price(case_params(3), Method::laguerre, 64);
        const double dt = seconds_since(t0);
        Outcome o;
        o.pass = std::abs(r.call - 0.1722687384) < 1e-6 && dt < 2.0;
        o.detail = fmt("call %.10f, %.2f s", r.call, dt);
        report(2, "case 3 reproduction", o);
    }

    // AC3
    {
        const double want[] = {0.1931459862, 0.2463981292, 0.3062092452, 0.3481391471};
        Outcome o;
        o.pass = true;
        bool explained = true;
        for (int id = 4; id <= 7; ++id) {
            const PriceResult r = price(case_params(id));
            PriceOptions co;
            co.spectrum = Spectrum::continuous;
            const double cont = price(case_params(id), co).call;
            const double d = r.call - want[id - 4];
            if (std::abs(d) >= 1e-4) {
                o.pass = false;
                // documented cause: the bound-state term the tabulated column leaves out
                explained = explained && std::abs(cont - want[id - 4]) < 1e-6;
            }
            o.detail += fmt("%scase %d %.10f (%+.1e)", id > 4 ? ", " : "", id, r.call, d);
            info(fmt("case %d continuous part alone %.10f, bound-state term %.3e", id, cont, r.discrete_term));
        }
        o.documented = !o.pass && explained;
        report(3, "cases 4-7 reproduction", o);
    }

    // AC6 first: its case-1 estimate feeds AC4
    std::vector<McPair> mc(case_count + 1);
    double mc_seconds = 0.0;
    {
        McConfig cfg;
        cfg.paths = 1000000;
        cfg.steps = 1000;
        cfg.seed = 42;
        const auto t0 = clock_type::now();
        for (int id = 1; id <= case_count; ++id) mc[id] = simulate_asian_pair(case_params(id), cfg);
        mc_seconds = seconds_since(t0);
    }

    // AC4
    {
        const auto t0 = clock_type::now();
        const PriceResult r = price(case_params(1), Method::laguerre, 200);
        const double dt = seconds_since(t0);
        const double z = std::abs(r.call - mc[1].call.mean) / mc[1].call.std_error;
        Outcome o;
        o.pass = std::abs(r.call - 0.0559968559) < 5e-4 && z < 3.0 && dt < 10.0;
        o.detail = fmt("call %.10f, MC %.6f(%.0f) z=%.2f, %.2f s", r.call, mc[1].call.mean,
                       mc[1].call.std_error * 1e6, z, dt);
        report(4, "case 1 at 200 nodes", o);
        info(fmt("case 1 converged (trapezoid, 20000 panels) %.10f",
                 price(case_params(1), Method::trapezoid, 20000).call));
    }

    // AC5
    {
        Outcome o;
        double worst = 0.0;
        for (int id = 2; id <= case_count; ++id) {
            const double a = price(case_params(id), Method::laguerre, 128).call;
            const double b = price(case_params(id), Method::trapezoid, 20000).call;
            worst = std::max(worst, std::abs(a - b) / b);
        }
        o.pass = worst < 1e-7;
        o.detail = fmt("max relative gap %.2e", worst);
        report(5, "Laguerre vs trapezoid", o);
    }

    // AC6
    {
        Outcome o;
        bool stats = true;
        double worst = 0.0;
        for (int id = 1; id <= case_count; ++id) {
            const double q = price(case_params(id)).call;
            const double z = std::abs(q - mc[id].call.mean) / mc[id].call.std_error;
            worst = std::max(worst, z);
            stats = stats && z < 3.0;
            info(fmt("case %d quadrature %.8f MC %.8f +- %.1e (z=%.2f)", id, q, mc[id].call.mean,
                     mc[id].call.std_error, z));
        }
        o.pass = stats && mc_seconds < 60.0;
        // documented cause: wall time on this host, not statistics
        o.documented = !o.pass && stats;
        o.detail = fmt("max z %.2f, %.1f s for 7 x 1e6 paths x 1000 steps", worst, mc_seconds);
        report(6, "Monte Carlo consistency", o);
    }

    // AC7
    {
        Outcome o;
        double worst = 0.0;
        for (int id = 1; id <= case_count; ++id) {
            const MarketParams m = case_params(id);
            const PriceResult r = price(m);
            worst = std::max(worst, std::abs(r.call - r.put - parity_gap(m)));
        }
        o.pass = worst < 1e-12;
        o.detail = fmt("max |call - put - gap| %.1e", worst);
        report(7, "put-call parity", o);
    }

    // AC8
    {
        Outcome o;
        double worst = 0.0;
        for (int n : {4, 8, 16, 32, 64}) {
            const QuadratureRule rule = gauss_laguerre_rule(n);
            for (int j = 0; j <= 2 * n - 1; ++j) {
                long double s = 0.0L;
                for (int i = 0; i < n; ++i)
                    s += std::exp((long double)rule.log_weights[i] + j * std::log((long double)rule.nodes[i]));
                worst = std::max(worst, std::abs(double(s) / std::tgamma(j + 1.0) - 1.0));
            }
        }
        o.pass = worst < 1e-11;
        o.detail = fmt("max relative moment error %.1e", worst);
        report(8, "Gauss-Laguerre exactness", o);
    }

    // AC9
    {
        const auto t0 = clock_type::now();
        const auto reports = run_suite(Suite::all);
        const double dt = seconds_since(t0);
        Outcome o;
        std::set<std::string> failed;
        bool corrected_ok = true;
        for (const auto& r : reports) {
            if (!r.passed) failed.insert(r.name);
            info(fmt("%-30s %s residual %.2e tol %.0e", r.name.c_str(), r.passed ? "pass" : "FAIL",
                     r.max_rel_residual, r.tolerance));
        }
        bool only_known = true;
        for (const auto& n : failed) {
            if (!false_as_printed.count(n)) only_known = false;
            if (failed.count(n + "_corrected")) corrected_ok = false;
        }
        o.pass = failed.empty() && dt < 120.0;
        o.documented = !o.pass && only_known && corrected_ok && dt < 120.0;
        o.detail = fmt("%zu of %zu reports pass, %.1f s", reports.size() - failed.size(), reports.size(), dt);
        report(9, "identity suite", o);
    }

    // AC10
    {
        Outcome o;
        o.pass = true;
        if (!cli.empty()) {
            const char* cmds[] = {"price --r 0.18 --sigma 0.30 --T 1 --S0 2.0 --K 2.0",
                                  "table --cases 1-3 --format csv",
                                  "convergence --case 1 --n-list 50,100,200,400",
                                  "mc --case 5 --paths 20000 --steps 100 --seed 3",
                                  "verify --suite pricing"};
            for (const char* c : cmds) {
                const std::string cmd = "'" + cli + "' " + c + " 2>/dev/null";
                const std::string a = run_capture(cmd), b = run_capture(cmd);
                if (a != b || a.empty()) {
                    o.pass = false;
                    o.detail += std::string("differs: ") + c + "; ";
                }
            }
            o.detail += "5 commands run twice through the CLI";
        } else {
            McConfig cfg;
            cfg.paths = 20000;
            cfg.steps = 100;
            const bool same_mc = simulate_asian_pair(case_params(5), cfg).call.mean
                                 == simulate_asian_pair(case_params(5), cfg).call.mean;
            const bool same_q = price(case_params(1)).call == price(case_params(1)).call;
            o.pass = same_mc && same_q;
            o.detail = "in-process repeat of pricer and Monte Carlo (no CLI path given)";
        }
        report(10, "determinism", o);
    }

    std::printf("summary: %d unexpected failure(s), %d documented failure(s), %.1f s\n", failures,
                documented_failures, seconds_since(start));
    return failures == 0 ? 0 : 1;
}
