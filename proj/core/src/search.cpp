#include "waring/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace waring {

namespace {

constexpr double kPow10[] = {1.0, 10.0, 100.0, 1e3, 1e4, 1e5, 1e6};

// A run of tau grid indices at fixed alpha, in units of the final grid.
struct Column {
    std::int64_t ia;
    std::int64_t it_lo;
    std::int64_t it_hi;
    std::int64_t stride;
};

struct Best {
    double raw = 0.0;
    double theta = 0.0;
    std::int64_t ia = 0;
    std::int64_t it = 0;
    bool found = false;

    // Strict "better" order: smaller raw delta, then lexicographically
    // smallest (alpha, tau). Deterministic regardless of evaluation order.
    bool better_than(const Best& o) const {
        if (!o.found) return found;
        if (raw != o.raw) return raw < o.raw;
        if (ia != o.ia) return ia < o.ia;
        return it < o.it;
    }
};

unsigned thread_count(const SearchConfig& config) {
    unsigned n = config.threads;
    if (n == 0) {
        if (const char* env = std::getenv("WARING_THREADS")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v > 0) n = static_cast<unsigned>(v);
        }
    }
    if (n == 0) n = 1;
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    return std::min(n, hw);
}

Best scan_columns(std::span<const Column> cols, const DeltaState& state, RecursionVariant variant,
                  double inv_scale, std::uint64_t& evaluations) {
    Best best;
    const int k = state.k;
    const double theta_cap = 1.0 / k;
    for (const Column& col : cols) {
        const double alpha = static_cast<double>(col.ia) * inv_scale;
        if (variant == RecursionVariant::SingleStepV2 && alpha == 0.0) continue;
        for (std::int64_t it = col.it_lo; it <= col.it_hi; it += col.stride) {
            const double tau = static_cast<double>(it) * inv_scale;
            const RawStep r = detail::eval_step(variant, k, state.delta, state.s, alpha, tau);
            ++evaluations;
            if (!std::isfinite(r.theta) || !std::isfinite(r.raw_delta)) continue;
            if (r.theta < 0.0 || r.theta > theta_cap) continue;
            if (variant == RecursionVariant::SingleStepV2 && std::abs(r.a) <= 1.0) continue;
            Best cand{r.raw_delta, r.theta, col.ia, it, true};
            if (cand.better_than(best)) best = cand;
        }
    }
    return best;
}

std::int64_t align_up(std::int64_t v, std::int64_t stride) {
    const std::int64_t r = v % stride;
    if (r == 0) return v;
    return r > 0 ? v + (stride - r) : v - r;
}

std::int64_t align_down(std::int64_t v, std::int64_t stride) {
    const std::int64_t r = v % stride;
    if (r == 0) return v;
    return r > 0 ? v - r : v - (stride + r);
}

}  // namespace

ParamBox ParamBox::defaults_for(RecursionVariant v) {
    switch (v) {
        case RecursionVariant::SingleStep: return {-1.0, 1.0, 0.0, 1.0, true};
        case RecursionVariant::PairStep: return {-2.0, 2.0, 0.0, 2.0, true};
        // Section 5 publishes no constraint box; alpha < 0 keeps every
        // denominator positive and |a| = |2 - 2*Delta/(alpha k)| > 2.
        default: return {-3.0, 0.0, 0.0, 1.0, true};
    }
}

ParamBox ParamBox::single_point(double alpha, double tau) {
    return {alpha, alpha, tau, alpha + tau, false};
}

void SearchConfig::validate() const {
    if (digits < 1 || digits > 6) throw DomainError("SearchConfig: digits must be in [1, 6]");
    if (!(epsilon_stop > 0.0)) throw DomainError("SearchConfig: epsilon_stop must be > 0");
    if (initial_d != 1 && initial_d != 2)
        throw DomainError("SearchConfig: initial_d must be 1 or 2");
    if (max_s != 0 && max_s <= initial_d)
        throw DomainError("SearchConfig: max_s must exceed initial_d");
    if (refine_levels < -1) throw DomainError("SearchConfig: refine_levels must be >= 0 (or -1)");
}

ParamBox SearchConfig::effective_box() const {
    return box ? *box : ParamBox::defaults_for(variant);
}

int SearchConfig::effective_refine_levels() const {
    return refine_levels < 0 ? std::max(0, digits - 2) : refine_levels;
}

StepChoice optimize_step(const DeltaState& state, const SearchConfig& config) {
    config.validate();
    const ParamBox pbox = config.effective_box();
    const int digits = config.digits;
    const double scale = kPow10[digits];
    const double inv_scale = 1.0 / scale;
    const std::int64_t amin = std::llround(pbox.alpha_min * scale);
    const std::int64_t amax = std::llround(pbox.alpha_max * scale);
    const std::int64_t tmin = std::llround(pbox.tau_min * scale);
    const std::int64_t sum = std::llround(pbox.sum_limit * scale);

    const int level_lo = std::max(1, digits - config.effective_refine_levels());
    const unsigned nthreads = thread_count(config);

    Best best;
    std::uint64_t evaluations = 0;

    for (int level = level_lo; level <= digits; ++level) {
        const std::int64_t stride = std::llround(kPow10[digits - level]);
        const std::int64_t edge = pbox.open ? stride : 0;
        const std::int64_t ia_lo = align_up(amin + edge, stride);
        const std::int64_t ia_hi = align_down(amax - edge, stride);
        const std::int64_t it_lo = align_up(tmin, stride);
        if (ia_lo > ia_hi) continue;

        std::vector<Column> cols;
        auto add_column = [&](std::int64_t ia, std::int64_t lo, std::int64_t hi) {
            lo = std::max(lo, it_lo);
            hi = std::min(hi, sum - ia - edge);
            if (lo <= hi) cols.push_back({ia, lo, hi, stride});
        };

        if (level == level_lo) {
            // full sweep of the level's grid
            for (std::int64_t ia = ia_lo; ia <= ia_hi; ia += stride)
                add_column(ia, it_lo, sum - ia - edge);
        } else {
            // window of +-2 coarse cells around the incumbent
            const std::int64_t w = 20 * stride;
            const std::int64_t wa_lo = std::max(ia_lo, align_up(best.ia - w, stride));
            const std::int64_t wa_hi = std::min(ia_hi, align_down(best.ia + w, stride));
            for (std::int64_t ia = wa_lo; ia <= wa_hi; ia += stride)
                add_column(ia, best.it - w, best.it + w);
            // boundary lines of the box at this level's resolution: the tau
            // floor, the alpha + tau ridge, and both alpha edge columns (the
            // published optima concentrate on these lines)
            for (std::int64_t ia = ia_lo; ia <= ia_hi; ia += stride) {
                add_column(ia, it_lo, it_lo);
                const std::int64_t ridge = sum - ia - edge;
                add_column(ia, ridge, ridge);
            }
            add_column(ia_lo, it_lo, sum - ia_lo - edge);
            add_column(ia_hi, it_lo, sum - ia_hi - edge);
        }
        // (0, 0) is always a candidate when the box allows it
        if (0 >= ia_lo && 0 <= ia_hi && it_lo <= 0) add_column(0, 0, 0);

        if (cols.empty()) continue;

        Best level_best;
        if (nthreads <= 1 || cols.size() < 2 * nthreads) {
            level_best = scan_columns(cols, state, config.variant, inv_scale, evaluations);
        } else {
            std::vector<Best> partial(nthreads);
            std::vector<std::uint64_t> counts(nthreads, 0);
            std::vector<std::thread> workers;
            const size_t chunk = (cols.size() + nthreads - 1) / nthreads;
            for (unsigned t = 0; t < nthreads; ++t) {
                const size_t lo = t * chunk;
                const size_t hi = std::min(cols.size(), lo + chunk);
                if (lo >= hi) break;
                workers.emplace_back([&, t, lo, hi] {
                    partial[t] = scan_columns({cols.data() + lo, hi - lo}, state, config.variant,
                                              inv_scale, counts[t]);
                });
            }
            for (std::thread& w : workers) w.join();
            for (unsigned t = 0; t < nthreads; ++t) {
                evaluations += counts[t];
                if (partial[t].better_than(level_best)) level_best = partial[t];
            }
        }
        if (level_best.better_than(best)) best = level_best;
    }

    if (!best.found)
        throw NoFeasiblePoint("constraint box excludes every grid point at s=" +
                              std::to_string(state.s + s_increment(config.variant)));

    StepChoice choice;
    choice.params = {static_cast<double>(best.ia) * inv_scale,
                     static_cast<double>(best.it) * inv_scale};
    choice.theta = best.theta;
    DeltaState next;
    next.k = state.k;
    next.s = state.s + s_increment(config.variant);
    next.raw_delta = best.raw;
    next.delta = std::max(best.raw, 0.0);
    choice.next = next;
    choice.evaluations = evaluations;
    return choice;
}

SearchOutcome run_to_zero(const DeltaState& initial, const SearchConfig& config) {
    config.validate();
    const int max_s = config.max_s > 0 ? config.max_s : 4 * initial.k;
    const int inc = s_increment(config.variant);

    SearchOutcome out;
    out.trace.k = initial.k;
    out.trace.variant = config.variant;
    out.trace.initial_s = initial.s;
    out.trace.initial_delta = initial.delta;

    DeltaState st = initial;
    if (st.delta <= config.epsilon_stop) {
        out.s_star = st.s;
        return out;
    }
    while (st.delta > config.epsilon_stop && st.s + inc <= max_s) {
        const StepChoice c = optimize_step(st, config);
        out.evaluations += c.evaluations;
        st = c.next;
        out.trace.rows.push_back(
            {st.s, c.params.alpha, c.params.tau, c.theta, st.delta, st.raw_delta});
    }
    if (st.delta <= config.epsilon_stop) out.s_star = st.s;
    return out;
}

SearchOutcome run_to_zero(int k, const SearchConfig& config) {
    return run_to_zero(DeltaState::initial(k, config.initial_d), config);
}

DominanceReport search_dominates_replay(int k, std::span<const StepParams> reference,
                                        const SearchConfig& config, double slack) {
    config.validate();
    const double scale = kPow10[config.digits];
    for (const StepParams& p : reference) {
        if (std::abs(p.alpha * scale - std::llround(p.alpha * scale)) > 1e-6 ||
            std::abs(p.tau * scale - std::llround(p.tau * scale)) > 1e-6)
            throw InvalidParams("reference params do not lie on the config grid");
    }

    const Trace replayed = replay_trace(k, config.variant, reference, config.initial_d);
    DominanceReport report;
    DeltaState st = DeltaState::initial(k, config.initial_d);
    for (const TraceRow& ref : replayed.rows) {
        double searched;
        if (st.delta == 0.0) {
            searched = 0.0;  // search already bottomed out; it stays there
        } else {
            const StepChoice c = optimize_step(st, config);
            st = c.next;
            searched = st.delta;
        }
        const double margin = searched - ref.delta;
        report.rows.push_back({ref.s, searched, ref.delta, margin});
        report.worst_margin = std::max(report.worst_margin, margin);
        if (margin > slack)
            throw DominanceViolated("search worse than reference at s=" + std::to_string(ref.s) +
                                    " by " + std::to_string(margin));
    }
    return report;
}

}  // namespace waring
