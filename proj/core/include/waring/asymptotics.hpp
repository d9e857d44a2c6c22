#pragma once

#include <optional>

#include "waring/recursion.hpp"

namespace waring {

// The four published closed forms estimating how many recursion steps drive
// Delta to zero. The two v2 forms correspond to the section's two proofs:
// SingleV2 balances against U_i = P^(1/2) H~ Z~ S_{s-1}; SingleWithCorrection
// reuses the section-4 recursion with the correction term delta kept.
enum class ScriptIForm { PairLargeK, SingleLargeK, SingleV2, SingleWithCorrection };

ScriptIForm default_form(RecursionVariant v);

// (beta, omega) parameterization of a step near the asymptotic regime.
// rho and delta_corr are derived from (k, beta, omega, form), never set
// independently.
struct AsymptoticParams {
    double beta = 0.0;
    double omega = 0.0;
    double rho = 0.0;
    double delta_corr = 0.0;
    ScriptIForm form = ScriptIForm::SingleLargeK;

    static AsymptoticParams make(int k, double beta, double omega, ScriptIForm form);
    static AsymptoticParams make(int k, double beta, double omega, RecursionVariant v);
};

// The step-count estimate. delta_d is the starting deficiency Delta(d); the
// pair/single forms default it to k - 2, the v2 forms require it. Throws
// DomainError when a logarithm argument is non-positive or a denominator
// vanishes.
double script_I(int k, const AsymptoticParams& params, std::optional<double> delta_d = {});

// Objective whose root is the script-G constant: 3(1+x)/(1+3x) - log(1+3x)/x.
double script_g_objective(double x);

// The root of the objective in (0.01, 5), bracketed bisection plus one
// Newton polish; residual below 1e-12.
double solve_script_g();

// Leading coefficients of the headline bounds: G(k) <= c * k + o(k).
struct HeadlineCoefficients {
    double c_thm11 = 0.0;  // 4
    double c_thm41 = 0.0;  // 2 * (2/3)(1 + 1/G) log(1 + 3G) ~ 3.661
    double c_thm51 = 0.0;  // 2 * ((4/3) log 2 + 2/3) ~ 3.182
    double d_coef = 0.0;   // (4/3) log 2 ~ 0.9242
};

HeadlineCoefficients headline_coefficients();

}  // namespace waring
