// asianq: command line front end for the Asian option pricer

#include "asianq/cases.hpp"
#include "asianq/errors.hpp"
#include "asianq/identities.hpp"
#include "asianq/mc.hpp"
#include "asianq/pricer.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

enum Exit { ok = 0, identity_failure = 1, usage = 2, numerical = 3 };

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MarketFlags {
    double r = NAN, sigma = NAN, T = NAN, S0 = NAN, K = NAN;

    void add(CLI::App* cmd, bool required) {
        auto* a = cmd->add_option("--r", r, "risk-free rate");
        auto* b = cmd->add_option("--sigma", sigma, "volatility");
        auto* c = cmd->add_option("--T", T, "maturity in years");
        auto* d = cmd->add_option("--S0", S0, "spot");
        auto* e = cmd->add_option("--K", K, "strike");
        if (required) {
            for (auto* o : {a, b, c, d, e}) o->required();
        }
    }
    bool any() const {
        return !std::isnan(r) || !std::isnan(sigma) || !std::isnan(T) || !std::isnan(S0) || !std::isnan(K);
    }
    asianq::MarketParams params() const {
        if (std::isnan(r) || std::isnan(sigma) || std::isnan(T) || std::isnan(S0) || std::isnan(K))
            throw usage_error("market flags --r --sigma --T --S0 --K must all be given");
        return {r, sigma, T, S0, K};
    }
};

json to_json(const asianq::PriceResult& p) {
    json j;
    j["call"] = p.call;
    j["put"] = p.put;
    j["normalized_put"] = p.normalized_put;
    j["discrete_term"] = p.discrete_term;
    j["method"] = asianq::to_string(p.method);
    j["nodes_used"] = p.nodes_used;
    j["diagnostics"] = json::object();
    for (const auto& [k, v] : p.diagnostics) j["diagnostics"][k] = v;
    return j;
}

json to_json(const asianq::McEstimate& e) {
    return {{"mean", e.mean}, {"std_error", e.std_error}, {"paths_used", e.paths_used}};
}

json to_json(const asianq::IdentityReport& r) {
    return {{"name", r.name},
            {"grid", r.grid},
            {"max_rel_residual", r.max_rel_residual},
            {"tolerance", r.tolerance},
            {"passed", r.passed}};
}

// "2-3", "1,4,6", "1-3,7"
std::vector<int> parse_cases(const std::string& spec) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string part;
    auto number = [&](const std::string& s) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(s, &pos);
        } catch (const std::exception&) {
            throw usage_error("bad case list: " + spec);
        }
        if (pos != s.size() || v < 1 || v > asianq::case_count)
            throw usage_error("case ids must be in 1.." + std::to_string(asianq::case_count) + ": " + spec);
        return v;
    };
    while (std::getline(ss, part, ',')) {
        const auto dash = part.find('-');
        if (dash == std::string::npos) {
            out.push_back(number(part));
            continue;
        }
        const int lo = number(part.substr(0, dash)), hi = number(part.substr(dash + 1));
        if (hi < lo) throw usage_error("bad case range: " + part);
        for (int i = lo; i <= hi; ++i) out.push_back(i);
    }
    if (out.empty()) throw usage_error("empty case list");
    return out;
}

std::vector<int> parse_n_list(const std::string& spec) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(part, &pos);
        } catch (const std::exception&) {
            throw usage_error("bad node list: " + spec);
        }
        if (pos != part.size() || v < 1) throw usage_error("bad node list: " + spec);
        out.push_back(v);
    }
    if (out.empty()) throw usage_error("empty node list");
    return out;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// ---- subcommands -----------------------------------------------------------

struct PriceCmd {
    MarketFlags m;
    std::string method = "laguerre";
    int points = 0;
    std::string payoff = "both";

    int run() const {
        asianq::PriceOptions opt;
        opt.method = asianq::method_from_string(method);
        opt.n = points;
        const asianq::PriceResult res = asianq::price(m.params(), opt);
        json j = to_json(res);
        if (payoff == "call") j.erase("put");
        if (payoff == "put") j.erase("call");
        std::cout << j.dump() << '\n';
        return ok;
    }
};

struct TableCmd {
    std::string cases = "1-7";
    std::string format = "csv";

    int run() const {
        const std::vector<int> ids = parse_cases(cases);
        const char* header = "case,r,sigma,T,S0,K,nu,tau,k,put,call,method,nodes";
        if (format == "csv") {
            std::cout << header << '\n';
        } else {
            std::printf("%4s %7s %6s %4s %5s %5s %9s %9s %9s %14s %14s %9s %5s\n", "case", "r", "sigma", "T", "S0", "K",
                        "nu", "tau", "k", "put", "call", "method", "nodes");
        }
        for (int id : ids) {
            const asianq::MarketParams m = asianq::case_params(id);
            const asianq::NormalizedParams np = asianq::normalize(m);
            const asianq::PriceResult p = asianq::price(m);
            if (format == "csv") {
                std::cout << id << ',' << num(m.r) << ',' << num(m.sigma) << ',' << num(m.T) << ',' << num(m.S0) << ','
                          << num(m.K) << ',' << num(np.nu) << ',' << num(np.tau) << ',' << num(np.k) << ','
                          << num(p.put) << ',' << num(p.call) << ',' << asianq::to_string(p.method) << ','
                          << p.nodes_used << '\n';
            } else {
                std::printf("%4d %7.4f %6.3f %4.1f %5.2f %5.2f %9.4f %9.6f %9.6f %14.10f %14.10f %9s %5d\n", id, m.r,
                            m.sigma, m.T, m.S0, m.K, np.nu, np.tau, np.k, p.put, p.call,
                            asianq::to_string(p.method).c_str(), p.nodes_used);
            }
        }
        std::cout.flush();
        return ok;
    }
};

struct ConvergenceCmd {
    int case_id = 0;
    std::string n_list;
    std::string out;

    int run() const {
        const std::vector<int> ns = parse_n_list(n_list);
        const auto rows = asianq::convergence_scan(asianq::case_params(case_id), ns);
        std::ostringstream os;
        os << "n,put,call,delta_call\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            os << rows[i].n << ',' << num(rows[i].put) << ',' << num(rows[i].call) << ',';
            if (i > 0) os << num(std::abs(rows[i].call - rows[i - 1].call));
            os << '\n';
        }
        if (out.empty()) {
            std::cout << os.str();
        } else {
            std::ofstream f(out);
            if (!f) throw usage_error("cannot open " + out);
            f << os.str();
        }
        return ok;
    }
};

struct McCmd {
    int case_id = 0;
    MarketFlags m;
    long paths = 100000;
    int steps = 1000;
    std::uint64_t seed = 42;
    bool antithetic = true;

    int run() const {
        if (case_id != 0 && m.any()) throw usage_error("give either --case or market flags, not both");
        if (case_id == 0 && !m.any()) throw usage_error("mc needs --case or market flags");
        const asianq::MarketParams mp = case_id ? asianq::case_params(case_id) : m.params();
        asianq::McConfig cfg;
        cfg.paths = paths;
        cfg.steps = steps;
        cfg.seed = seed;
        cfg.antithetic = antithetic;
        const asianq::McPair pair = asianq::simulate_asian_pair(mp, cfg);
        json j{{"call", to_json(pair.call)},
               {"put", to_json(pair.put)},
               {"parity_residual", to_json(pair.parity_residual)},
               {"steps", steps},
               {"seed", seed},
               {"antithetic", antithetic}};
        std::cout << j.dump() << '\n';
        return ok;
    }
};

struct VerifyCmd {
    std::string suite = "all";
    double tol_scale = 1.0;

    int run() const {
        asianq::Suite s;
        try {
            s = asianq::suite_from_string(suite);
        } catch (const asianq::domain_error& e) {
            throw usage_error(e.what());
        }
        if (!(tol_scale > 0.0)) throw usage_error("--tol-scale must be positive");
        bool all = true;
        for (const asianq::IdentityReport& r : asianq::run_suite(s, tol_scale)) {
            std::cout << to_json(r).dump() << '\n';
            if (!r.passed) {
                all = false;
                std::cerr << "FAILED " << r.name << " residual " << r.max_rel_residual << " > " << r.tolerance << '\n';
            }
        }
        return all ? ok : identity_failure;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Asian option pricer"};
    app.require_subcommand(1);

    PriceCmd price_cmd;
    auto* price = app.add_subcommand("price", "price one contract");
    price_cmd.m.add(price, true);
    price->add_option("--method", price_cmd.method, "laguerre, trapezoid or monte_carlo")
        ->check(CLI::IsMember({"laguerre", "trapezoid", "monte_carlo", "mc"}));
    price->add_option("--points", price_cmd.points, "nodes, panels or paths (0: default policy)")
        ->check(CLI::NonNegativeNumber);
    price->add_option("--payoff", price_cmd.payoff, "call, put or both")->check(CLI::IsMember({"call", "put", "both"}));

    TableCmd table_cmd;
    auto* table = app.add_subcommand("table", "price the built-in test cases");
    table->add_option("--cases", table_cmd.cases, "case range, e.g. 2-3 or 1,4");
    table->add_option("--format", table_cmd.format, "csv or text")->check(CLI::IsMember({"csv", "text"}));

    ConvergenceCmd conv_cmd;
    auto* conv = app.add_subcommand("convergence", "Laguerre node scan for one case");
    conv->add_option("--case", conv_cmd.case_id, "case id")->required()->check(CLI::Range(1, asianq::case_count));
    conv->add_option("--n-list", conv_cmd.n_list, "comma separated node counts")->required();
    conv->add_option("--out", conv_cmd.out, "output file (default stdout)");

    McCmd mc_cmd;
    auto* mc = app.add_subcommand("mc", "Monte Carlo estimate");
    mc->add_option("--case", mc_cmd.case_id, "case id")->check(CLI::Range(1, asianq::case_count));
    mc_cmd.m.add(mc, false);
    mc->add_option("--paths", mc_cmd.paths, "number of paths")->check(CLI::PositiveNumber);
    mc->add_option("--steps", mc_cmd.steps, "monitoring steps")->check(CLI::PositiveNumber);
    mc->add_option("--seed", mc_cmd.seed, "seed");
    mc->add_flag("--antithetic,!--no-antithetic", mc_cmd.antithetic, "antithetic pairs (default on)");

    VerifyCmd verify_cmd;
    auto* verify = app.add_subcommand("verify", "run the identity suite");
    verify->add_option("--suite", verify_cmd.suite, "all, specfun, transforms, kernel or pricing");
    verify->add_option("--tol-scale", verify_cmd.tol_scale, "multiplies every tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (price->parsed()) return price_cmd.run();
        if (table->parsed()) return table_cmd.run();
        if (conv->parsed()) return conv_cmd.run();
        if (mc->parsed()) return mc_cmd.run();
        if (verify->parsed()) return verify_cmd.run();
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const asianq::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const asianq::numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return numerical;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return numerical;
    }
    return usage;
}
