#pragma once

#include "asianq/specfun.hpp"

#include <map>
#include <string>
#include <vector>

namespace asianq {

struct MarketParams {
    double r = 0.0;
    double sigma = 0.0;
    double T = 0.0;
    double S0 = 0.0;
    double K = 0.0;
};

struct NormalizedParams {
    double nu = 0.0;
    double tau = 0.0;
    double k = 0.0;
    double kappa = 0.0;
};

enum class Method { laguerre, trapezoid, monte_carlo };

// full: continuous integral plus the bound-state sum; continuous: integral only
enum class Spectrum { full, continuous };

struct PriceOptions {
    Method method = Method::laguerre;
    int n = 0;  // 0 selects the default policy (nodes, panels or paths)
    Spectrum spectrum = Spectrum::full;
    bool estimate_error = false;  // laguerre only: compare against a ceil(3n/4) rule
};

struct PriceResult {
    double put = 0.0;
    double call = 0.0;
    double normalized_put = 0.0;
    Method method = Method::laguerre;
    int nodes_used = 0;
    double discrete_term = 0.0;  // bound-state part of normalized_put
    std::map<std::string, double> diagnostics;
};

struct ConvergenceRow {
    int n = 0;
    double put = 0.0;
    double call = 0.0;
};

void validate(const MarketParams& m);
NormalizedParams normalize(const MarketParams& m);

// (1 - e^{-rT}) S0 / (rT) - e^{-rT} K
double parity_gap(const MarketParams& m);

// scale from normalized put to currency: e^{-rT} 4 S0 / (sigma^2 T)
double put_scale(const MarketParams& m);

int default_order(const NormalizedParams& np);
double trapezoid_pmax(const NormalizedParams& np);

double continuous_integrand(double p, const NormalizedParams& np);
LogMagnitude continuous_integrand_log(double p, const NormalizedParams& np);

double discrete_correction(const NormalizedParams& np);

double price_put_normalized(const NormalizedParams& np, Method method, int n,
                            Spectrum spectrum = Spectrum::full);

PriceResult price(const MarketParams& m, const PriceOptions& opt);
PriceResult price(const MarketParams& m, Method method = Method::laguerre, int n = 0);

std::vector<ConvergenceRow> convergence_scan(const MarketParams& m, const std::vector<int>& n_values);

std::string to_string(Method m);
Method method_from_string(const std::string& s);

} // namespace asianq
