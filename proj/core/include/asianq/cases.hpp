#pragma once

#include "asianq/pricer.hpp"

#include <array>

namespace asianq {

constexpr int case_count = 7;

// Benchmark contracts 1..7 by their primitive parameters (r, sigma, T, S0, K).
const std::array<MarketParams, case_count>& builtin_cases();

// id in 1..7; throws domain_error otherwise
MarketParams case_params(int id);

} // namespace asianq
