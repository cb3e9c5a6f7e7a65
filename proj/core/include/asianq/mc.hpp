#pragma once

#include "asianq/pricer.hpp"

#include <cstdint>

namespace asianq {

enum class Payoff { put, call };

struct McConfig {
    long paths = 100000;
    int steps = 1000;
    std::uint64_t seed = 42;
    bool antithetic = true;
    unsigned threads = 0;  // 0: hardware concurrency; results do not depend on it
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long paths_used = 0;
};

struct McPair {
    McEstimate put;
    McEstimate call;
    McEstimate parity_residual;  // call - put - parity_gap, estimated path by path
};

void validate(const McConfig& cfg);

McPair simulate_asian_pair(const MarketParams& m, const McConfig& cfg);
McEstimate simulate_asian(const MarketParams& m, const McConfig& cfg, Payoff payoff);
double parity_check(const MarketParams& m, const McConfig& cfg);

} // namespace asianq
