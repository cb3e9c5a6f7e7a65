#pragma once

#include <string>
#include <vector>

namespace asianq {

struct IdentityReport {
    std::string name;
    std::vector<std::vector<double>> grid;
    double max_rel_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

enum class Suite { all, specfun, transforms, kernel, pricing };

Suite suite_from_string(const std::string& s);
std::string to_string(Suite s);

// stated: the formula exactly as written in the source text.
// corrected: the amended form that holds numerically (see README).
enum class Form { stated, corrected };

// ---- special functions ----------------------------------------------------

IdentityReport check_gamma_identity(double tol = 1e-12);
IdentityReport check_gamma_recurrence(double tol = 1e-12);
IdentityReport check_kummer_transform(double tol = 1e-10);
IdentityReport check_tricomi_paths(double tol = 1e-9);
IdentityReport check_whittaker_reality(double tol = 1e-10);
IdentityReport check_whittaker_bessel_bridge(double tol = 1e-8);
IdentityReport check_whittaker_pde(double tol = 1e-5);
IdentityReport check_conical_laplace(double mu, double p, double x, double tol = 1e-7);
IdentityReport check_parabolic_hermite(double tol = 1e-10);
IdentityReport check_bessel_poly_orthogonality(double a, double b, int m, int n, double tol = 1e-8);

// ---- index transforms -----------------------------------------------------

enum class KlTestFunction { exp_decay, gauss };

IdentityReport check_kl_roundtrip(KlTestFunction fn, double p_max, double tol = 1e-5);
IdentityReport check_mixed_kp_integral(double mu, double a, double y, Form form = Form::stated,
                                       double tol = 1e-6);
IdentityReport check_mixed_wk_integral(double mu, double x, double y, Form form = Form::stated,
                                       double tol = 1e-5);
IdentityReport check_whittaker_addition(double mu, double a, double b, double tol = 1e-5);
IdentityReport check_cosine_transform(double mu, double u, double y, double p_max,
                                      Form form = Form::stated, double tol = 1e-4);
IdentityReport check_macdonald_product(double lambda, double a, double b, double tol = 1e-6);
IdentityReport check_power_expansion(int p_exp, double x, Form form = Form::stated, double tol = 1e-5);

// ---- kernels ----------------------------------------------------------------

IdentityReport check_mehler_kernel(double t, double x, double y, int n_terms, double tol = 1e-10);
IdentityReport check_yor_eigenfunction(double zeta, double p, const std::vector<double>& u_points,
                                       Form form = Form::stated, double tol = 1e-4);

// ---- pricing ----------------------------------------------------------------

IdentityReport check_put_call_parity(double tol = 1e-12);
IdentityReport check_laguerre_exactness(double tol = 1e-11);
IdentityReport check_strike_monotonicity();
IdentityReport check_method_agreement(double tol = 1e-7);

// Runs the named suite; every tolerance is multiplied by tol_scale.
std::vector<IdentityReport> run_suite(Suite suite, double tol_scale = 1.0);

} // namespace asianq
