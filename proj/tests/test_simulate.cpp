#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "ltsp/simulate.hpp"

using namespace ltsp;

TEST_CASE("virtual lower bound on toy3") {
    const Instance inst = fixtures::toy3();
    CHECK(virtual_lb(inst, {0}) == 32);
    CHECK(virtual_lb(inst, {10}) == 62);
}

TEST_CASE("toy3 costs under hand-checked schedules") {
    const Instance inst = fixtures::toy3();
    CHECK(simulate(inst, {}, {0}).total_cost == 52);
    CHECK(simulate(inst, {{{1, 1}}}, {0}).total_cost == 42);
    CHECK(simulate(inst, {}, {10}).total_cost == 82);
    CHECK(simulate(inst, {{{1, 1}}}, {10}).total_cost == 92);
}

TEST_CASE("serve times and u-turn counts") {
    const Instance inst = fixtures::toy3();
    const auto plain = simulate(inst, {}, {0});
    CHECK(plain.serve_time.at(0) == 12);
    CHECK(plain.serve_time.at(1) == 20);
    CHECK(plain.uturns == 1);

    const auto detoured = simulate(inst, {{{1, 1}}}, {0});
    CHECK(detoured.serve_time.at(1) == 10);
    CHECK(detoured.serve_time.at(0) == 22);
    CHECK(detoured.uturns == 3);
}

TEST_CASE("invalid schedules are rejected, ordered-only are priced") {
    const Instance inst = build_instance({1, 1, 1}, {{1, 1}, {2, 1}, {3, 1}});
    CHECK_THROWS_AS(simulate(inst, {{{2, 1}}}, {0}), InvalidScheduleError);
    CHECK_THROWS_AS(simulate(inst, {{{0, 0}, {1, 1}}}, {0}), InvalidScheduleError);
    // Overlapping pair: legal order, costed as-is.
    const auto r = simulate(inst, {{{1, 2}, {0, 2}}}, {0});
    CHECK(r.total_cost >= virtual_lb(inst, {0}));
}

TEST_CASE("trajectory csv for toy3 without detours") {
    const Instance inst = fixtures::toy3();
    std::ostringstream out;
    export_trajectory_csv(simulate(inst, {}, {0}), out);
    CHECK(out.str() ==
          "time,position,event\n"
          "0,10,MoveTo\n"
          "10,0,UTurn\n"
          "12,2,Serve(1)\n"
          "20,10,Serve(3)\n"
          "20,10,Stop\n");
}

TEST_CASE("svg marks every u-turn") {
    const Instance inst = fixtures::toy3();
    const auto sim = simulate(inst, {{{1, 1}}}, {10});
    std::ostringstream out;
    export_trajectory_svg(inst, sim, out);
    const std::string svg = out.str();
    size_t circles = 0, at = 0;
    while ((at = svg.find("class=\"uturn\"", at)) != std::string::npos) {
        ++circles;
        ++at;
    }
    CHECK(circles == 3);
    CHECK(svg.find("<polyline") != std::string::npos);
}

TEST_CASE("no-detour cost grows by n times U") {
    std::mt19937_64 rng(20240817);
    for (int i = 0; i < 50; ++i) {
        const Instance inst = random_instance(rng);
        const cost_t base = simulate(inst, {}, {0}).total_cost;
        for (int64_t U : {1, 5, 1000}) {
            CHECK(simulate(inst, {}, {U}).total_cost ==
                  base + static_cast<cost_t>(inst.n) * U);
        }
    }
}

TEST_CASE("cost dominates the lower bound on random schedules") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const Instance inst = fixtures::small_random(rng, 6, 12);
        for (int64_t U : {0, 3, 50}) {
            enumerate_laminar(inst.n_req(), [&](const Schedule& s) {
                CHECK(simulate(inst, s, {U}).total_cost >= virtual_lb(inst, {U}));
            });
        }
    }
}
