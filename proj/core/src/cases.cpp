#include "asianq/cases.hpp"
#include "asianq/errors.hpp"

#include <string>

namespace asianq {

const std::array<MarketParams, case_count>& builtin_cases() {
    static const std::array<MarketParams, case_count> cases = {{
        {0.02, 0.10, 1.0, 2.0, 2.0},
        {0.18, 0.30, 1.0, 2.0, 2.0},
        {0.0125, 0.25, 2.0, 2.0, 2.0},
        {0.05, 0.50, 1.0, 1.9, 2.0},
        {0.05, 0.50, 1.0, 2.0, 2.0},
        {0.05, 0.50, 1.0, 2.1, 2.0},
        {0.05, 0.50, 2.0, 2.0, 2.0},
    }};
    return cases;
}

MarketParams case_params(int id) {
    if (id < 1 || id > case_count) throw domain_error("case id must be in 1.." + std::to_string(case_count));
    return builtin_cases()[id - 1];
}

} // namespace asianq
