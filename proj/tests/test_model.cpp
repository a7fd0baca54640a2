#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "ltsp/model.hpp"

using namespace ltsp;

TEST_CASE("build_instance lays files out contiguously") {
    const Instance inst = fixtures::toy3();
    REQUIRE(inst.n_files() == 3);
    CHECK(inst.m == 10);
    CHECK(inst.files[0].left == 0);
    CHECK(inst.files[1].left == 2);
    CHECK(inst.files[2].left == 5);
    CHECK(inst.files[2].right() == 10);
    CHECK(inst.files[0].index == 1);
    CHECK(inst.files[2].index == 3);
}

TEST_CASE("requested view over toy3") {
    const Instance inst = fixtures::toy3();
    REQUIRE(inst.n_req() == 2);
    CHECK(inst.requested == std::vector<int>{1, 3});
    CHECK(inst.n == 3);
    CHECK(inst.rl(0) == 0);
    CHECK(inst.rr(0) == 2);
    CHECK(inst.rs(0) == 2);
    CHECK(inst.rx(0) == 1);
    CHECK(inst.rl(1) == 5);
    CHECK(inst.rr(1) == 10);
    CHECK(inst.rx(1) == 2);
    CHECK(inst.nleft(0) == 0);
    CHECK(inst.nleft(1) == 1);
    CHECK(inst.view.xprefix == std::vector<int64_t>{0, 1, 3});
}

TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS_AS(build_instance({}, {{1, 1}}), EmptyTapeError);
    CHECK_THROWS_AS(build_instance({2, 0, 5}, {{1, 1}}), NonPositiveSizeError);
    CHECK_THROWS_AS(build_instance({2, -3}, {{1, 1}}), NonPositiveSizeError);
    CHECK_THROWS_AS(build_instance({2, 3}, {}), NoRequestsError);
    CHECK_THROWS_AS(build_instance({2, 3}, {{3, 1}}), UnknownFileIndexError);
    CHECK_THROWS_AS(build_instance({2, 3}, {{0, 1}}), UnknownFileIndexError);
}

TEST_CASE("zero multiplicities do not create requested files") {
    const Instance inst = build_instance({1, 1, 1}, {{2, 3}, {3, 0}});
    CHECK(inst.n_req() == 1);
    CHECK(inst.requested == std::vector<int>{2});
    CHECK(inst.n == 3);
}

TEST_CASE("schedule validation verdicts") {
    const Instance inst = build_instance({1, 1, 1, 1}, {{1, 1}, {2, 1}, {3, 1}, {4, 1}});

    auto verdict = [&](const Schedule& s) {
        return validate_schedule(inst, s).verdict;
    };

    CHECK(verdict({}) == ScheduleVerdict::LaminarValid);
    CHECK(verdict({{{3, 3}, {1, 2}, {0, 0}}}) == ScheduleVerdict::LaminarValid);
    CHECK(verdict({{{1, 2}, {0, 3}}}) == ScheduleVerdict::LaminarValid);

    // Sharing an endpoint breaks strict nesting but keeps the order legal.
    CHECK(verdict({{{1, 3}, {0, 3}}}) == ScheduleVerdict::OrderedOnly);
    CHECK(verdict({{{2, 3}, {1, 2}}}) == ScheduleVerdict::OrderedOnly);
    CHECK(verdict({{{1, 1}, {1, 2}}}) == ScheduleVerdict::OrderedOnly);

    CHECK(verdict({{{0, 0}, {1, 1}}}) == ScheduleVerdict::Invalid);  // ascending a
    CHECK(verdict({{{2, 1}}}) == ScheduleVerdict::Invalid);          // b < a
    CHECK(verdict({{{0, 4}}}) == ScheduleVerdict::Invalid);          // out of range
    CHECK(verdict({{{-1, 0}}}) == ScheduleVerdict::Invalid);
}

TEST_CASE("invalid verdicts carry a reason") {
    const Instance inst = fixtures::toy3();
    const auto v = validate_schedule(inst, {{{1, 0}}});
    CHECK(v.verdict == ScheduleVerdict::Invalid);
    CHECK(!v.reason.empty());
}
