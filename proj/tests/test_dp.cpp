#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ltsp/dp_exact.hpp"
#include "ltsp/oracle.hpp"
#include "ltsp/simulate.hpp"

using namespace ltsp;

TEST_CASE("toy3 optima") {
    const Instance inst = fixtures::toy3();

    const auto at0 = solve_dp(inst, {0});
    CHECK(at0.cost == 42);
    CHECK(at0.schedule == Schedule{{{1, 1}}});

    const auto at10 = solve_dp(inst, {10});
    CHECK(at10.cost == 82);
    CHECK(at10.schedule == Schedule{});

    // At U=5 both choices cost 67; ties resolve to the skip branch.
    const auto at5 = solve_dp(inst, {5});
    CHECK(at5.cost == 67);
    CHECK(at5.schedule == Schedule{});
}

TEST_CASE("single requested file degenerates to the lower bound") {
    const Instance inst = build_instance({4, 6}, {{2, 3}});
    for (int64_t U : {0, 7}) {
        const auto res = solve_dp(inst, {U});
        CHECK(res.cost == virtual_lb(inst, {U}));
        CHECK(res.schedule == Schedule{});
    }
}

TEST_CASE("dp matches the brute-force oracle") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Instance inst = fixtures::small_random(rng, 6, 12);
        for (int64_t U : {0, 1, 5, 1000}) {
            const auto dp = solve_dp(inst, {U});
            const auto oracle = brute_force_opt(inst, {U});
            CHECK(dp.cost == oracle.cost);
        }
    }
}

TEST_CASE("traceback schedules replay to the reported cost") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i) {
        const Instance inst = fixtures::small_random(rng, 8, 20);
        for (int64_t U : {0, 3, 100}) {
            const auto dp = solve_dp(inst, {U});
            CHECK(validate_schedule(inst, dp.schedule).verdict ==
                  ScheduleVerdict::LaminarValid);
            CHECK(simulate(inst, dp.schedule, {U}).total_cost == dp.cost);
        }
    }
}

TEST_CASE("window at least n_req changes nothing") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        const Instance inst = fixtures::small_random(rng, 8, 20);
        DpOptions opts;
        opts.window = inst.n_req();
        for (int64_t U : {0, 5}) {
            CHECK(solve_dp(inst, {U}, opts).cost == solve_dp(inst, {U}).cost);
        }
    }
}

TEST_CASE("cell budget aborts oversized solves") {
    const Instance inst = fixtures::lemma2_instance(20);
    DpOptions opts;
    opts.cell_budget = 3;
    CHECK_THROWS_AS(solve_dp(inst, {0}, opts), CapacityError);
}

TEST_CASE("cell counter is populated") {
    const Instance inst = fixtures::lemma2_instance(10);
    const auto res = solve_dp(inst, {0});
    CHECK(res.stats.cells > 0);
}
