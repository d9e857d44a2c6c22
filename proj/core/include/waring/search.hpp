#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "waring/recursion.hpp"

namespace waring {

// Parameter region searched at a given grid resolution. With grid spacing
// h = 10^-digits and an open box, the candidates are
//   alpha in [alpha_min + h, alpha_max - h],
//   tau   in [tau_min, sum_limit - alpha - h],
// so open constraints like alpha + tau < 1 become alpha + tau <= 1 - h,
// matching the boundary values the published tables use. A closed box
// includes its edges; use it to pin the grid to explicit points.
struct ParamBox {
    double alpha_min = -1.0;
    double alpha_max = 1.0;
    double tau_min = 0.0;
    double sum_limit = 1.0;  // alpha + tau stays below (open) or at (closed) this
    bool open = true;

    static ParamBox defaults_for(RecursionVariant v);
    static ParamBox single_point(double alpha, double tau);
};

struct SearchConfig {
    int digits = 5;            // grid spacing 10^-digits
    int refine_levels = -1;    // coarse-to-fine passes; -1 = digits - 2
    double epsilon_stop = 1e-6;
    int max_s = 0;             // safety cap; 0 = 4k chosen at run time
    RecursionVariant variant = RecursionVariant::SingleStep;
    int initial_d = 2;
    std::optional<ParamBox> box;  // override the variant's default region
    unsigned threads = 0;         // 0 = WARING_THREADS env var, else 1

    void validate() const;  // throws DomainError on out-of-range fields
    ParamBox effective_box() const;
    int effective_refine_levels() const;
};

struct StepChoice {
    StepParams params;
    double theta = 0.0;
    DeltaState next;
    std::uint64_t evaluations = 0;
};

// Grid-feasible (alpha, tau) minimizing the next raw Delta over the
// constraint box, by a full sweep at the coarsest level followed by
// refinement windows around the incumbent plus the box boundary lines at
// every level. Ties break to the lexicographically smallest (alpha, tau).
// The pair (0, 0) is always among the candidates. Candidate evaluation may
// fan out across threads; the result is independent of evaluation order.
StepChoice optimize_step(const DeltaState& state, const SearchConfig& config);

struct SearchOutcome {
    Trace trace;
    std::optional<int> s_star;  // first s with Delta(s) <= epsilon_stop
    std::uint64_t evaluations = 0;
};

// Iterates optimize_step from Delta(initial_d) = k - initial_d until
// Delta <= epsilon_stop or the cap is hit (soft: s_star stays empty).
SearchOutcome run_to_zero(int k, const SearchConfig& config);
SearchOutcome run_to_zero(const DeltaState& initial, const SearchConfig& config);

struct DominanceReport {
    struct Row {
        int s;
        double searched;  // Delta from the per-step search
        double replayed;  // Delta from replaying the reference parameters
        double margin;    // searched - replayed
    };
    std::vector<Row> rows;
    double worst_margin = 0.0;
};

// Checks that at every step the searched Delta is no worse than replaying
// `reference` on the same grid (margin <= slack). Throws DominanceViolated
// with the offending s otherwise.
DominanceReport search_dominates_replay(int k, std::span<const StepParams> reference,
                                        const SearchConfig& config, double slack = 1e-9);

}  // namespace waring
