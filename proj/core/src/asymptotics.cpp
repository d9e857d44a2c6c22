#include "waring/asymptotics.hpp"

#include <cmath>
#include <string>

namespace waring {

ScriptIForm default_form(RecursionVariant v) {
    switch (v) {
        case RecursionVariant::PairStep: return ScriptIForm::PairLargeK;
        case RecursionVariant::SingleStep: return ScriptIForm::SingleLargeK;
        default: return ScriptIForm::SingleV2;
    }
}

AsymptoticParams AsymptoticParams::make(int k, double beta, double omega, ScriptIForm form) {
    if (k < 3) throw DomainError("AsymptoticParams: k must be >= 3");
    if (!(omega > 0.0)) throw DomainError("AsymptoticParams: omega must be > 0");
    AsymptoticParams p;
    p.beta = beta;
    p.omega = omega;
    p.form = form;
    switch (form) {
        case ScriptIForm::PairLargeK:
        case ScriptIForm::SingleLargeK:
            p.rho = 1.0 + beta - omega;
            p.delta_corr = 0.0;
            break;
        case ScriptIForm::SingleV2:
            p.rho = 2.0 - (omega + beta);
            if (beta == 0.0 || beta == 1.0)
                throw DomainError("AsymptoticParams: v2 correction needs beta not in {0, 1}");
            p.delta_corr =
                omega / (1.0 - beta) * std::pow(2.0 * (beta - 1.0) / beta, -(k - 1));
            break;
        case ScriptIForm::SingleWithCorrection:
            p.rho = 1.0 + beta - omega;
            if (beta == 0.0)
                throw DomainError("AsymptoticParams: correction needs beta != 0");
            p.delta_corr = (omega / beta) * std::pow((beta - 1.0) / (2.0 * beta), k - 1);
            break;
    }
    if (!std::isfinite(p.delta_corr)) throw DomainError("AsymptoticParams: correction not finite");
    return p;
}

AsymptoticParams AsymptoticParams::make(int k, double beta, double omega, RecursionVariant v) {
    return make(k, beta, omega, default_form(v));
}

namespace {

double checked_log_ratio(double num, double den, const char* what) {
    if (!(num > 0.0) || !(den > 0.0)) throw DomainError(std::string(what) + ": log argument <= 0");
    return std::log(num / den);
}

}  // namespace

double script_I(int k, const AsymptoticParams& p, std::optional<double> delta_d) {
    const double beta = p.beta, omega = p.omega, rho = p.rho, dc = p.delta_corr;
    double num, den_arg;
    switch (p.form) {
        case ScriptIForm::PairLargeK: {
            const double dd = delta_d.value_or(k - 2.0);
            num = checked_log_ratio(2.0 * rho * k, 3.0 * omega * dd + 2.0 * rho * k, "script_I");
            den_arg = 1.0 - 3.0 * omega / (2.0 * (k * (1.0 + beta) + omega));
            break;
        }
        case ScriptIForm::SingleLargeK: {
            const double dd = delta_d.value_or(k - 2.0);
            num = checked_log_ratio(rho * k, 3.0 * omega * dd + rho * k, "script_I");
            den_arg = 1.0 - 3.0 * omega / (2.0 * (k * (1.0 + beta) + omega));
            break;
        }
        case ScriptIForm::SingleV2: {
            if (!delta_d) throw DomainError("script_I: v2 form requires delta_d");
            const double dd = *delta_d;
            const double step = 4.0 * omega + dc * (2.0 + beta);
            num = checked_log_ratio(k * (rho - omega - 2.0 * dc),
                                    step * dd + k * (rho - omega - 2.0 * dc), "script_I");
            den_arg = 1.0 - step / (2.0 * (k * (2.0 - beta) + dc + omega));
            break;
        }
        default: {  // SingleWithCorrection
            if (!delta_d) throw DomainError("script_I: corrected form requires delta_d");
            const double dd = *delta_d;
            const double step = 3.0 * omega + (2.0 - beta) * dc;
            num = checked_log_ratio(k * (rho - dc), dd * step + k * (rho - dc), "script_I");
            den_arg = 1.0 - step / (2.0 * (k * (beta + 1.0) + dc + omega));
            break;
        }
    }
    if (!(den_arg > 0.0)) throw DomainError("script_I: contraction factor <= 0");
    const double den = std::log(den_arg);
    if (den == 0.0) throw DomainError("script_I: contraction factor is 1");
    const double value = num / den;
    if (!std::isfinite(value)) throw DomainError("script_I: result not finite");
    return value;
}

double script_g_objective(double x) {
    return 3.0 * (1.0 + x) / (1.0 + 3.0 * x) - std::log1p(3.0 * x) / x;
}

double solve_script_g() {
    // the objective is negative at 0.5 and positive at 0.7
    double lo = 0.01, hi = 5.0;
    double flo = script_g_objective(lo);
    if (!(flo < 0.0) || !(script_g_objective(hi) > 0.0))
        throw Error("solve_script_g: no sign change on (0.01, 5)");
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (script_g_objective(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    // one Newton polish with a finite-difference slope
    double x = 0.5 * (lo + hi);
    const double h = 1e-7;
    const double slope = (script_g_objective(x + h) - script_g_objective(x - h)) / (2.0 * h);
    if (slope != 0.0) x -= script_g_objective(x) / slope;
    return x;
}

HeadlineCoefficients headline_coefficients() {
    HeadlineCoefficients c;
    const double g = solve_script_g();
    c.c_thm11 = 4.0;
    c.c_thm41 = 2.0 * (2.0 / 3.0) * (1.0 + 1.0 / g) * std::log1p(3.0 * g);
    c.d_coef = (4.0 / 3.0) * std::log(2.0);
    c.c_thm51 = 2.0 * (c.d_coef + 2.0 / 3.0);
    return c;
}

}  // namespace waring
