#include <doctest.h>

#include <cmath>
#include <random>

#include "waring/recursion.hpp"
#include "waring/tables.hpp"

using namespace waring;

TEST_CASE("initial states carry the known lambda values") {
    const DeltaState d1 = DeltaState::initial(7, 1);
    CHECK(d1.delta == 6.0);  // lambda_1 = 1
    CHECK(d1.lambda() == doctest::Approx(1.0));
    const DeltaState d2 = DeltaState::initial(7, 2);
    CHECK(d2.delta == 5.0);  // lambda_2 = 2
    CHECK(d2.lambda() == doctest::Approx(2.0));
    CHECK_THROWS_AS(DeltaState::initial(7, 3), DomainError);
}

TEST_CASE("single step reproduces printed rows") {
    // k=5, s: 2->3 at (0, 0)
    auto [theta, next] = step_single(DeltaState::initial(5, 2), {0.0, 0.0});
    CHECK(std::abs(theta - 0.125120) < 1e-6);
    CHECK(std::abs(next.delta - 2.333618) < 1e-6);
    CHECK(next.s == 3);

    // k=5, s: 4->5 with the boundary parameters
    auto [theta5, next5] =
        step_single(DeltaState::seeded(5, 4, 1.774482), {-0.9999, 1.9998});
    CHECK(std::abs(theta5 - 0.000009) < 1e-6);
    CHECK(std::abs(next5.delta - 1.274485) < 1e-6);

    // k=6, s: 2->3
    auto [theta6, next6] = step_single(DeltaState::initial(6, 2), {0.0, 0.0});
    CHECK(std::abs(theta6 - 0.100009) < 1e-6);
    CHECK(std::abs(next6.delta - 3.272749) < 1e-6);
}

TEST_CASE("pair step matches an extended-precision scalar evaluation") {
    // k=5, s: 2->4 at (0, 0); reference values recomputed at 40 digits
    auto [theta, next] = step_pair(DeltaState::initial(5, 2), {0.0, 0.0});
    CHECK(theta == doctest::Approx(0.15453875).epsilon(1e-12));
    CHECK(next.raw_delta == doctest::Approx(2.204679141345407).epsilon(1e-12));
    CHECK(next.s == 4);
}

TEST_CASE("pair step fixed point at Delta = 0") {
    for (int k : {5, 8, 13}) {
        const DeltaState zero = DeltaState::seeded(k, k + 1, 0.0);
        auto [theta, next] = step_pair(zero, {0.0, 0.0});
        if (k * theta == 1.0) CHECK(next.raw_delta == 0.0);
        CHECK(std::abs(next.raw_delta) < 1e-15);
    }
}

TEST_CASE("single step fixed point at Delta = 0") {
    const DeltaState zero = DeltaState::seeded(5, 7, 0.0);
    auto [theta, next] = step_single(zero, {0.0, 0.0});
    CHECK(5 * theta == 1.0);
    CHECK(next.raw_delta == 0.0);
}

TEST_CASE("v2 step frozen values") {
    // extended-precision re-evaluation gives theta = -0.34831821347524937,
    // raw next Delta = -2.0138457575483066
    auto [theta, next] = step_single_v2(DeltaState::seeded(10, 4, 2.0), {0.5, 0.1});
    CHECK(theta == doctest::Approx(-0.34831821347524937).epsilon(1e-12));
    CHECK(next.raw_delta == doctest::Approx(-2.0138457575483066).epsilon(1e-12));
    CHECK(next.delta == 0.0);  // clamped
    CHECK(next.raw_delta < next.delta);
}

TEST_CASE("v2 step against the large-beta parameterized form") {
    // k=20, Delta = k/3, alpha = beta*Delta/k with beta = -3, tau = 0:
    // theta equals (1 - alpha)/(2 Delta - alpha k) up to the a^{-k+1} term,
    // which is below 1e-9 here
    const double delta = 20.0 / 3.0;
    auto [theta, next] = step_single_v2(DeltaState::seeded(20, 5, delta), {-1.0, 0.0});
    const double closed = (1.0 - (-1.0)) / (2.0 * delta - (-1.0) * 20.0);
    CHECK(std::abs(theta - closed) < 1e-9);
    CHECK(theta > closed);  // the correction term is positive for a > 1
}

TEST_CASE("v2 step with vanishing theta numerator") {
    // tau = 1 - alpha makes both theta terms vanish
    const double alpha = -0.5, tau = 1.5;
    auto [theta, next] = step_single_v2(DeltaState::seeded(10, 4, 2.0), {alpha, tau});
    CHECK(theta == 0.0);
    CHECK(next.raw_delta == doctest::Approx(2.0 - (1.0 - alpha / 2.0) + tau / 2.0).epsilon(1e-15));
}

TEST_CASE("parameter validation") {
    const DeltaState st = DeltaState::initial(10, 2);
    CHECK_THROWS_AS(step_single(st, {1.5, 0.0}), InvalidParams);
    CHECK_THROWS_AS(step_single(st, {-1.0, 0.0}), InvalidParams);
    CHECK_THROWS_AS(step_single(st, {0.0, -0.1}), InvalidParams);
    CHECK_THROWS_AS(step_single(st, {0.5, 0.5}), InvalidParams);  // alpha + tau = 1
    CHECK_THROWS_AS(step_pair(st, {2.0, 0.0}), InvalidParams);
    CHECK_THROWS_AS(step_pair(st, {1.0, 1.0}), InvalidParams);
    CHECK_NOTHROW(step_pair(st, {-3.0, 4.0}));  // pair box has no lower alpha bound
    CHECK_THROWS_AS(step_single_v2(st, {0.0, 0.0}), InvalidParams);
    // alpha k = Delta and 2 Delta = alpha k are degenerate denominators
    CHECK_THROWS_AS(step_single_v2(DeltaState::seeded(10, 3, 5.0), {0.5, 0.0}), InvalidParams);
    CHECK_THROWS_AS(step_single_v2(DeltaState::seeded(10, 3, 2.5), {0.5, 0.0}), InvalidParams);
    CHECK_THROWS_AS(step_single(st, {std::nan(""), 0.0}), InvalidParams);
}

TEST_CASE("v2 rejects |a| <= 1") {
    // k=10, Delta=3, alpha=0.5: a = 2(5-3)/5 = 0.8
    CHECK_THROWS_AS(step_single_v2(DeltaState::seeded(10, 4, 3.0), {0.5, 0.1}), DegenerateA);
}

TEST_CASE("theta profile ends at the step theta") {
    struct Case {
        int k;
        double delta;
        int s_prev;
        StepParams p;
        RecursionVariant v;
    };
    const Case cases[] = {
        {5, 3.0, 2, {0.0, 0.0}, RecursionVariant::SingleStep},
        {5, 1.774482, 4, {-0.9999, 1.9998}, RecursionVariant::SingleStep},
        {9, 7.0, 2, {0.5, 0.25}, RecursionVariant::PairStep},
        {12, 4.0, 6, {-1.25, 0.75}, RecursionVariant::SingleStepV2},
    };
    for (const Case& c : cases) {
        const auto profile = theta_profile(c.k, c.delta, c.s_prev, c.p, c.v);
        REQUIRE(profile.size() == static_cast<size_t>(c.k));
        const StepResult res = step(c.v, DeltaState::seeded(c.k, c.s_prev, c.delta), c.p);
        CHECK(profile[static_cast<size_t>(c.k - 1)] == res.theta);
    }
}

TEST_CASE("theta profile at (0,0) starts at 1/k") {
    const auto profile = theta_profile(7, 5.0, 2, {0.0, 0.0}, RecursionVariant::SingleStep);
    CHECK(profile[0] == doctest::Approx(1.0 / 7).epsilon(1e-15));
}

TEST_CASE("theta profile matches printed boundary row") {
    const auto profile =
        theta_profile(5, 1.774482, 4, {-0.9999, 1.9998}, RecursionVariant::SingleStep);
    CHECK(std::abs(profile[4] - 0.000009) < 1e-6);
}

TEST_CASE("theta profile satisfies the affine recurrence element-wise") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> unit(0.05, 0.9);

    for (int trial = 0; trial < 50; ++trial) {
        const int k = 7;
        const double delta = 5.0 * unit(rng);
        const double alpha = unit(rng) * (trial % 2 == 0 ? 1.0 : -1.0) * 0.9;
        const double tau = unit(rng) * (1.0 - alpha) * 0.9;

        {
            // single: theta_i = a * theta_{i+1} + b descending from theta_k,
            // so profile[j+1] = a * profile[j] + b
            const auto prof =
                theta_profile(k, delta, 4, {alpha, tau}, RecursionVariant::SingleStep);
            const double lambda_prev = delta + 2.0 * 4 - k;
            const double a =
                ((2.0 * 5 - 2.0) - alpha * k - lambda_prev) / (k * (2.0 - 2.0 * alpha));
            const double b = (1.0 - alpha - tau) / (2.0 * k * (1.0 - alpha));
            for (size_t j = 0; j + 1 < prof.size(); ++j)
                CHECK(std::abs(prof[j + 1] - (a * prof[j] + b)) < 1e-12);
        }
        {
            const double alpha2 = -std::abs(alpha) - 0.1;  // v2 box keeps alpha < 0
            const auto prof =
                theta_profile(k, delta, 4, {alpha2, tau}, RecursionVariant::SingleStepV2);
            const double a = 2.0 * (alpha2 * k - delta) / (alpha2 * k);
            const double b = (1.0 - alpha2 - tau) / (alpha2 * k);
            // v2 runs upward: theta_{i+1} = a * theta_i + b, i.e.
            // profile[j] = a * profile[j+1] + b
            for (size_t j = 0; j + 1 < prof.size(); ++j)
                CHECK(std::abs(prof[j] - (a * prof[j + 1] + b)) < 1e-12);
        }
    }
}

TEST_CASE("replay with no steps keeps only the initial state") {
    const Trace t = replay_trace(5, RecursionVariant::SingleStep, {}, 2);
    CHECK(t.rows.empty());
    CHECK(t.initial_s == 2);
    CHECK(t.initial_delta == 3.0);
}

TEST_CASE("replay is deterministic") {
    std::vector<StepParams> params{{0.0, 0.0}, {-0.9999, 1.9998}, {0.1, 0.2}};
    const Trace a = replay_trace(9, RecursionVariant::SingleStep, params, 2);
    const Trace b = replay_trace(9, RecursionVariant::SingleStep, params, 2);
    CHECK(a == b);
}

TEST_CASE("replay reports the failing step index") {
    std::vector<StepParams> params{{0.0, 0.0}, {1.5, 0.0}};
    try {
        replay_trace(9, RecursionVariant::SingleStep, params, 2);
        FAIL("expected a replay error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("s=4") != std::string::npos);
    }
}

TEST_CASE("replaying the k=5 printed block reaches zero") {
    const auto block = tables::appendix_block(5);
    std::vector<StepParams> params;
    for (const auto& row : block) params.push_back({row.alpha, row.tau});
    const Trace t = replay_trace(5, RecursionVariant::SingleStep, params, 2);
    CHECK(t.rows.back().s == 8);
    CHECK(t.rows.back().delta <= 1e-6);
}

TEST_CASE("replaying the k=20 printed block stays within print tolerance") {
    const auto block = tables::appendix_block(20);
    std::vector<StepParams> params;
    for (const auto& row : block) params.push_back({row.alpha, row.tau});
    const Trace t = replay_trace(20, RecursionVariant::SingleStep, params, 2);
    REQUIRE(t.rows.size() == block.size());
    for (size_t i = 0; i < block.size(); ++i) {
        CHECK(std::abs(t.rows[i].theta - block[i].theta) <= 5e-6);
        CHECK(std::abs(t.rows[i].delta - block[i].delta) <= 5e-6);
    }
}

TEST_CASE("clamping keeps raw below clamped") {
    // overshooting the last step drives raw negative, delta to zero
    auto [theta, next] = step_single(DeltaState::seeded(5, 7, 0.3), {-0.9999, 1.9998});
    CHECK(next.raw_delta < 0.0);
    CHECK(next.delta == 0.0);
    CHECK(next.raw_delta <= next.delta);
}
