#include "doctest.h"
#include "oracles.hpp"
#include "z2z4/presets.hpp"
#include "z2z4/simulate.hpp"

using namespace z2z4;

TEST_CASE("simulation is deterministic for a fixed seed") {
    Z2Z4Code ex3 = example3_code();
    PDSet S = example3_pd_set();
    SimParams p{.seed = 42, .trials = 200, .weight = 1};
    SimReport a = simulate(ex3, S, p);
    SimReport b = simulate(ex3, S, p);
    CHECK(a.successes == b.successes);
    CHECK(a.failures == b.failures);
    CHECK(a.miscorrections == b.miscorrections);
    CHECK(a.error_model == "fixed-weight 1");
    CHECK(a.successes + a.failures + a.miscorrections == a.trials);
}

TEST_CASE("weight 0 and weight <= t always succeed") {
    Z2Z4Code ex3 = example3_code();
    PDSet S = example3_pd_set();
    SimReport zero = simulate(ex3, S, SimParams{.seed = 1, .trials = 100, .weight = 0});
    CHECK(zero.successes == 100);
    SimReport one = simulate(ex3, S, SimParams{.seed = 1, .trials = 300, .weight = 1});
    CHECK(one.successes == 300);
}

TEST_CASE("weight t+1 on example 3 never reproduces the codeword") {
    Z2Z4Code ex3 = example3_code();
    PDSet S = example3_pd_set();
    SimReport two = simulate(ex3, S, SimParams{.seed = 7, .trials = 400, .weight = 2});
    CHECK(two.successes < two.trials);
    CHECK(two.successes + two.failures + two.miscorrections == two.trials);
    // A weight-2 error leaves every codeword at distance >= 2 > t, so a
    // "decoded" outcome is necessarily a miscorrection.
    CHECK(two.successes == 0);
}

TEST_CASE("iid flip model and parameter validation") {
    Z2Z4Code ex3 = example3_code();
    PDSet S = example3_pd_set();
    SimReport r = simulate(ex3, S, SimParams{.seed = 5, .trials = 200, .flip_p = 0.05});
    CHECK(r.successes + r.failures + r.miscorrections == r.trials);
    CHECK(r.successes > 100);  // p = 0.05 on n = 8 rarely exceeds one flip

    CHECK_THROWS_AS(simulate(ex3, S, SimParams{.seed = 0, .trials = 0, .weight = 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(simulate(ex3, S, SimParams{.seed = 0, .trials = 1}), std::invalid_argument);
    CHECK_THROWS_AS(
        simulate(ex3, S, SimParams{.seed = 0, .trials = 1, .weight = 1, .flip_p = 0.1}),
        std::invalid_argument);
    CHECK_THROWS_AS(simulate(ex3, S, SimParams{.seed = 0, .trials = 1, .weight = 9}),
                    std::invalid_argument);
    CHECK_THROWS_AS(simulate(ex3, S, SimParams{.seed = 0, .trials = 1, .flip_p = 1.5}),
                    std::invalid_argument);
}
