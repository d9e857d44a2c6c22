#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "waring/errors.hpp"

namespace waring {

// Which recursion family a step belongs to:
//   PairStep     - section-2 recursion, consumes two new variables per step
//   SingleStep   - section-4 recursion, one variable per step
//   SingleStepV2 - section-5 recursion, one variable per step
enum class RecursionVariant { PairStep, SingleStep, SingleStepV2 };

constexpr int s_increment(RecursionVariant v) {
    return v == RecursionVariant::PairStep ? 2 : 1;
}

const char* variant_name(RecursionVariant v);

// Recursion state. `delta` is the deficiency Delta(s) = lambda_s + k - 2s,
// clamped at zero; `raw_delta` keeps the unclamped value for inspection and
// stopping decisions. lambda_s is never stored: it is recovered as
// delta + 2s - k where needed.
struct DeltaState {
    int k = 0;
    int s = 0;
    double delta = 0.0;
    double raw_delta = 0.0;

    // Delta(d) = k - d, valid for d = 1 (lambda_1 = 1) and d = 2 (lambda_2 = 2).
    static DeltaState initial(int k, int d);
    // External seeding with any known better starting deficiency.
    static DeltaState seeded(int k, int s, double delta);

    double lambda() const { return delta + 2.0 * s - k; }
};

// One step's free parameters.
struct StepParams {
    double alpha = 0.0;
    double tau = 0.0;
};

struct StepResult {
    double theta = 0.0;
    DeltaState next;
};

// Raw step evaluation without validation or clamping. The search uses this
// on large candidate batches and filters on the results; the public step
// operations wrap it with the variant's constraint checks.
struct RawStep {
    double a = 0.0;
    double theta = 0.0;
    double raw_delta = 0.0;
};

namespace detail {

// x^n for small non-negative integer n by repeated squaring. x may be
// negative; the sign is well defined for an integer exponent.
inline double pow_int(double x, int n) {
    double r = 1.0;
    while (n > 0) {
        if (n & 1) r *= x;
        x *= x;
        n >>= 1;
    }
    return r;
}

inline RawStep eval_single(int k, double delta_prev, int s_prev, double alpha, double tau) {
    const double lambda_prev = delta_prev + 2.0 * s_prev - k;
    const int s = s_prev + 1;
    const double a = ((2.0 * s - 2.0) - alpha * k - lambda_prev) / (k * (2.0 - 2.0 * alpha));
    const double c = (1.0 - alpha - tau) / (k * (1.0 - alpha) + delta_prev);
    const double theta_k = (1.0 - alpha - tau) / (k * (1.0 - alpha));
    const double theta = c + (theta_k - c) * pow_int(a, k - 1);
    const double raw =
        (delta_prev + (1.0 - alpha / 2.0) * (k * theta - 1.0) + tau / 2.0) / (1.0 + theta);
    return {a, theta, raw};
}

inline RawStep eval_pair(int k, double delta_prev, int s_prev, double alpha, double tau) {
    const double lambda_prev = delta_prev + 2.0 * s_prev - k;
    const int s = s_prev + 2;
    const double a =
        ((2.0 * s - 4.0) + (1.0 - alpha) * k - lambda_prev) / (k * (4.0 - 2.0 * alpha));
    const double c = (2.0 - alpha - tau) / ((2.0 - alpha) * k + delta_prev);
    const double theta_k = (2.0 - alpha - tau) / (k * (2.0 - alpha));
    const double theta = c + (theta_k - c) * pow_int(a, k - 1);
    const double raw =
        (delta_prev + (k * theta - 1.0) * (2.0 - alpha / 2.0) + tau / 2.0) / (1.0 + theta);
    return {a, theta, raw};
}

inline RawStep eval_single_v2(int k, double delta_prev, double alpha, double tau) {
    const double a = 2.0 * (alpha * k - delta_prev) / (alpha * k);
    const double t1 = (1.0 - alpha - tau) / (2.0 * delta_prev - alpha * k);
    const double t2 = (1.0 - alpha - tau) * delta_prev /
                      ((delta_prev - k * alpha) * (2.0 * delta_prev - alpha * k));
    const double theta = t1 + t2 / pow_int(a, k - 1);
    const double raw =
        (delta_prev + (1.0 - alpha / 2.0) * (k * theta - 1.0) + tau / 2.0) / (1.0 + theta);
    return {a, theta, raw};
}

inline RawStep eval_step(RecursionVariant v, int k, double delta_prev, int s_prev, double alpha,
                         double tau) {
    switch (v) {
        case RecursionVariant::PairStep: return eval_pair(k, delta_prev, s_prev, alpha, tau);
        case RecursionVariant::SingleStep: return eval_single(k, delta_prev, s_prev, alpha, tau);
        default: return eval_single_v2(k, delta_prev, alpha, tau);
    }
}

}  // namespace detail

// Throws InvalidParams when `p` violates the variant's constraint box.
// The section-5 checks depend on the current state (alpha*k against
// Delta(s-1)), so the state is part of the contract.
void validate_params(const StepParams& p, RecursionVariant v, const DeltaState& state);

// One step of the section-4 recursion: consumes Delta(s-1), produces
// (theta, Delta(s)) with s = state.s + 1.
StepResult step_single(const DeltaState& state, const StepParams& p);

// One step of the section-2 recursion: consumes Delta(s-2), produces
// (theta, Delta(s)) with s = state.s + 2.
StepResult step_pair(const DeltaState& state, const StepParams& p);

// One step of the section-5 recursion. Requires |a| > 1 so the a^{-k+1}
// term stays bounded; throws DegenerateA otherwise.
StepResult step_single_v2(const DeltaState& state, const StepParams& p);

StepResult step(RecursionVariant v, const DeltaState& state, const StepParams& p);

// The full scaling-exponent profile theta_k, theta_{k-1}, ..., theta_1.
// Element k-1 equals the theta of the matching step operation.
std::vector<double> theta_profile(int k, double delta_prev, int s_prev, const StepParams& p,
                                  RecursionVariant v);

// Per-step record; the columns mirror the intermediate-results table.
struct TraceRow {
    int s = 0;
    double alpha = 0.0;
    double tau = 0.0;
    double theta = 0.0;
    double delta = 0.0;
    double raw_delta = 0.0;
};

struct Trace {
    int k = 0;
    RecursionVariant variant = RecursionVariant::SingleStep;
    int initial_s = 2;
    double initial_delta = 0.0;
    std::vector<TraceRow> rows;

    const TraceRow* row_at(int s) const;
    // Delta at index s: the initial value, a row value, or nullopt.
    bool delta_at(int s, double& out) const;
};

bool operator==(const TraceRow&, const TraceRow&);
bool operator==(const Trace&, const Trace&);

// Applies `params` in order starting from Delta(d) = k - d. Pure: identical
// inputs give bit-identical traces. Step errors are rethrown with the
// failing s attached.
Trace replay_trace(int k, RecursionVariant v, std::span<const StepParams> params, int initial_d);

// Same, from an explicitly seeded state.
Trace replay_trace(const DeltaState& initial, RecursionVariant v,
                   std::span<const StepParams> params);

// Appends (0, 0) steps until the trace reaches target_s. At the zero fixed
// point these keep Delta at exactly zero, so a trace that bottomed out early
// can still certify larger t. Pair/single variants only.
Trace extend_trace(const Trace& trace, int target_s);

}  // namespace waring
