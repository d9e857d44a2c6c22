#include "waring/recursion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace waring {

const char* variant_name(RecursionVariant v) {
    switch (v) {
        case RecursionVariant::PairStep: return "s2";
        case RecursionVariant::SingleStep: return "s4";
        default: return "s5";
    }
}

DeltaState DeltaState::initial(int k, int d) {
    if (k < 2) throw DomainError("DeltaState::initial: k must be >= 2");
    if (d != 1 && d != 2) throw DomainError("DeltaState::initial: d must be 1 or 2");
    DeltaState st;
    st.k = k;
    st.s = d;
    st.delta = st.raw_delta = static_cast<double>(k - d);
    return st;
}

DeltaState DeltaState::seeded(int k, int s, double delta) {
    if (k < 2 || s < 1) throw DomainError("DeltaState::seeded: need k >= 2, s >= 1");
    if (!(delta >= 0.0)) throw DomainError("DeltaState::seeded: delta must be >= 0");
    DeltaState st;
    st.k = k;
    st.s = s;
    st.delta = st.raw_delta = delta;
    return st;
}

void validate_params(const StepParams& p, RecursionVariant v, const DeltaState& state) {
    const double alpha = p.alpha, tau = p.tau;
    if (!std::isfinite(alpha) || !std::isfinite(tau))
        throw InvalidParams("params must be finite");
    switch (v) {
        case RecursionVariant::PairStep:
            if (!(alpha < 2.0 && alpha + tau < 2.0))
                throw InvalidParams("pair step requires alpha < 2 and alpha + tau < 2");
            break;
        case RecursionVariant::SingleStep:
            if (!(std::abs(alpha) < 1.0 && tau >= 0.0 && alpha + tau < 1.0))
                throw InvalidParams(
                    "single step requires |alpha| < 1, tau >= 0, alpha + tau < 1");
            break;
        case RecursionVariant::SingleStepV2:
            if (alpha == 0.0) throw InvalidParams("v2 step requires alpha != 0");
            if (alpha * state.k == state.delta)
                throw InvalidParams("v2 step requires alpha*k != Delta(s-1)");
            if (2.0 * state.delta == alpha * state.k)
                throw InvalidParams("v2 step requires 2*Delta(s-1) != alpha*k");
            break;
    }
}

namespace {

DeltaState advance(const DeltaState& state, int ds, double raw) {
    DeltaState next;
    next.k = state.k;
    next.s = state.s + ds;
    next.raw_delta = raw;
    next.delta = std::max(raw, 0.0);
    return next;
}

void check_finite(const RawStep& r) {
    if (!std::isfinite(r.theta) || !std::isfinite(r.raw_delta))
        throw NonFinite("step produced a non-finite value");
}

}  // namespace

StepResult step_single(const DeltaState& state, const StepParams& p) {
    validate_params(p, RecursionVariant::SingleStep, state);
    if (state.s < 1) throw DomainError("step_single: state.s must be >= 1");
    const RawStep r = detail::eval_single(state.k, state.delta, state.s, p.alpha, p.tau);
    check_finite(r);
    return {r.theta, advance(state, 1, r.raw_delta)};
}

StepResult step_pair(const DeltaState& state, const StepParams& p) {
    validate_params(p, RecursionVariant::PairStep, state);
    const RawStep r = detail::eval_pair(state.k, state.delta, state.s, p.alpha, p.tau);
    check_finite(r);
    return {r.theta, advance(state, 2, r.raw_delta)};
}

StepResult step_single_v2(const DeltaState& state, const StepParams& p) {
    validate_params(p, RecursionVariant::SingleStepV2, state);
    const RawStep r = detail::eval_single_v2(state.k, state.delta, p.alpha, p.tau);
    if (std::abs(r.a) <= 1.0)
        throw DegenerateA("v2 step requires |a| > 1 so a^{-k+1} stays bounded");
    check_finite(r);
    return {r.theta, advance(state, 1, r.raw_delta)};
}

StepResult step(RecursionVariant v, const DeltaState& state, const StepParams& p) {
    switch (v) {
        case RecursionVariant::PairStep: return step_pair(state, p);
        case RecursionVariant::SingleStep: return step_single(state, p);
        default: return step_single_v2(state, p);
    }
}

std::vector<double> theta_profile(int k, double delta_prev, int s_prev, const StepParams& p,
                                  RecursionVariant v) {
    DeltaState st = DeltaState::seeded(k, s_prev, delta_prev);
    validate_params(p, v, st);
    const RawStep r = detail::eval_step(v, k, delta_prev, s_prev, p.alpha, p.tau);
    if (std::abs(r.a - 1.0) <= 1e-12) throw DegenerateA("theta profile requires a != 1");
    if (v == RecursionVariant::SingleStepV2 && std::abs(r.a) <= 1.0)
        throw DegenerateA("v2 profile requires |a| > 1");

    // theta_{k-i} = c + (theta_k - c) * a^i for the pair/single forms,
    // with c the i -> infinity fixed point; the v2 form runs the geometric
    // factor in the other direction, theta_{k-i} = c1 + c2 * a^{-i}.
    std::vector<double> profile(static_cast<size_t>(k));
    const double alpha = p.alpha, tau = p.tau;
    if (v == RecursionVariant::SingleStep || v == RecursionVariant::PairStep) {
        const double top = v == RecursionVariant::SingleStep ? 1.0 : 2.0;
        const double c = (top - alpha - tau) / ((top - alpha) * k + delta_prev);
        const double theta_k = (top - alpha - tau) / (k * (top - alpha));
        for (int i = 0; i < k; ++i)
            profile[static_cast<size_t>(i)] = c + (theta_k - c) * detail::pow_int(r.a, i);
    } else {
        const double c1 = (1.0 - alpha - tau) / (2.0 * delta_prev - alpha * k);
        const double c2 = (1.0 - alpha - tau) * delta_prev /
                          ((delta_prev - k * alpha) * (2.0 * delta_prev - alpha * k));
        for (int i = 0; i < k; ++i)
            profile[static_cast<size_t>(i)] = c1 + c2 / detail::pow_int(r.a, i);
    }
    for (double t : profile)
        if (!std::isfinite(t)) throw NonFinite("theta profile has a non-finite element");
    return profile;
}

const TraceRow* Trace::row_at(int s) const {
    for (const TraceRow& r : rows)
        if (r.s == s) return &r;
    return nullptr;
}

bool Trace::delta_at(int s, double& out) const {
    if (s == initial_s) {
        out = initial_delta;
        return true;
    }
    if (const TraceRow* r = row_at(s)) {
        out = r->delta;
        return true;
    }
    return false;
}

bool operator==(const TraceRow& a, const TraceRow& b) {
    return a.s == b.s && a.alpha == b.alpha && a.tau == b.tau && a.theta == b.theta &&
           a.delta == b.delta && a.raw_delta == b.raw_delta;
}

bool operator==(const Trace& a, const Trace& b) {
    return a.k == b.k && a.variant == b.variant && a.initial_s == b.initial_s &&
           a.initial_delta == b.initial_delta && a.rows == b.rows;
}

Trace replay_trace(const DeltaState& initial, RecursionVariant v,
                   std::span<const StepParams> params) {
    Trace trace;
    trace.k = initial.k;
    trace.variant = v;
    trace.initial_s = initial.s;
    trace.initial_delta = initial.delta;
    trace.rows.reserve(params.size());
    DeltaState st = initial;
    for (const StepParams& p : params) {
        StepResult res;
        try {
            res = step(v, st, p);
        } catch (const Error& e) {
            throw Error("replay failed at s=" + std::to_string(st.s + s_increment(v)) + ": " +
                        e.what());
        }
        st = res.next;
        trace.rows.push_back({st.s, p.alpha, p.tau, res.theta, st.delta, st.raw_delta});
    }
    return trace;
}

Trace replay_trace(int k, RecursionVariant v, std::span<const StepParams> params, int initial_d) {
    return replay_trace(DeltaState::initial(k, initial_d), v, params);
}

Trace extend_trace(const Trace& trace, int target_s) {
    if (trace.variant == RecursionVariant::SingleStepV2)
        throw DomainError("extend_trace: (0, 0) is outside the v2 constraint box");
    Trace out = trace;
    DeltaState st;
    st.k = trace.k;
    if (trace.rows.empty()) {
        st.s = trace.initial_s;
        st.delta = st.raw_delta = trace.initial_delta;
    } else {
        st.s = trace.rows.back().s;
        st.delta = trace.rows.back().delta;
        st.raw_delta = trace.rows.back().raw_delta;
    }
    while (st.s < target_s) {
        const StepResult res = step(trace.variant, st, {0.0, 0.0});
        st = res.next;
        out.rows.push_back({st.s, 0.0, 0.0, res.theta, st.delta, st.raw_delta});
    }
    return out;
}

}  // namespace waring
