#pragma once

#include <functional>
#include <vector>

namespace asianq {

struct QuadratureRule {
    int n = 0;
    std::vector<double> nodes;        // roots of L_n, increasing
    std::vector<double> weights;      // w_i, may underflow to 0 for large n
    std::vector<double> log_weights;  // log w_i
    std::vector<double> scaled_weights;  // w_i e^{x_i}
};

struct IntegrationResult {
    double value = 0.0;
    double est_error = 0.0;
    long evaluations = 0;
};

using RealFunction = std::function<double(double)>;

// 1 <= n <= 512
QuadratureRule gauss_laguerre_rule(int n);

// s * sum_i w_i e^{x_i} f(s x_i); f is the raw integrand on [0, inf)
IntegrationResult integrate_laguerre(const RealFunction& f, int n, double s = 1.0);

// composite trapezoid with n panels
IntegrationResult integrate_trapezoid(const RealFunction& f, double a, double b, int n);

// adaptive Simpson; throws convergence_error past depth 60
IntegrationResult integrate_adaptive(const RealFunction& f, double a, double b, double tol);

} // namespace asianq
