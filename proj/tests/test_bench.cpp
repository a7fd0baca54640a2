#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>
#include <sstream>

#include "fixtures.hpp"
#include "ltsp/bench.hpp"

using namespace ltsp;

namespace {

std::vector<CorpusEntry> toy_corpus() {
    return {{"TOY3", fixtures::toy3()},
            {"NEST", fixtures::lemma2_instance(4)}};
}

cost_t cost_of(const std::vector<RunRecord>& records, const std::string& tape,
               const std::string& alg, int64_t U) {
    for (const auto& r : records)
        if (r.tape == tape && r.algorithm == alg && r.U == U) return r.cost;
    FAIL("record not found");
    return 0;
}

std::string csv_without_time(const std::vector<RunRecord>& records) {
    std::ostringstream out;
    write_results_csv(out, records);
    return std::regex_replace(out.str(),
                              std::regex(",[0-9]+\\.[0-9]{6},"), ",T,");
}

}  // namespace

TEST_CASE("algorithm names round-trip") {
    for (const char* name : {"NoDetour", "GS", "FGS", "NFGS", "DP", "SimpleDP",
                             "LogDP(1)", "LogDP(2.5)", "LogNFGS(5)"}) {
        CHECK(AlgorithmSpec::parse(name).name() == name);
    }
    CHECK(AlgorithmSpec::parse("LogDP").lambda == 1.0);
    CHECK_THROWS_AS(AlgorithmSpec::parse("Unknown"), UnknownAlgorithm);
    CHECK_THROWS_AS(AlgorithmSpec::parse("LogDP(x)"), UnknownAlgorithm);
    CHECK_THROWS_AS(AlgorithmSpec::parse("LogDP(-1)"), UnknownAlgorithm);
}

TEST_CASE("suite costs on toy3") {
    const std::vector<CorpusEntry> corpus{{"TOY3", fixtures::toy3()}};
    const auto records = run_suite(
        corpus,
        {AlgorithmSpec{AlgorithmKind::NoDetour}, AlgorithmSpec{AlgorithmKind::GS},
         AlgorithmSpec{AlgorithmKind::DP}},
        {0});
    REQUIRE(records.size() == 3);
    CHECK(cost_of(records, "TOY3", "NoDetour", 0) == 52);
    CHECK(cost_of(records, "TOY3", "GS", 0) == 42);
    CHECK(cost_of(records, "TOY3", "DP", 0) == 42);

    const auto sweep = run_suite(corpus, {AlgorithmSpec{AlgorithmKind::DP}},
                                 {0, 5, 10});
    CHECK(cost_of(sweep, "TOY3", "DP", 0) == 42);
    CHECK(cost_of(sweep, "TOY3", "DP", 5) == 67);
    CHECK(cost_of(sweep, "TOY3", "DP", 10) == 82);
}

TEST_CASE("suite rejects empty configuration") {
    const std::vector<CorpusEntry> corpus{{"TOY3", fixtures::toy3()}};
    CHECK_THROWS_AS(run_suite(corpus, {}, {0}), BadSuiteConfig);
    CHECK_THROWS_AS(run_suite(corpus, {AlgorithmSpec{}}, {}), BadSuiteConfig);
    CHECK_THROWS_AS(run_suite({}, {AlgorithmSpec{}}, {0}), BadSuiteConfig);
}

TEST_CASE("records are sorted and bounded") {
    const auto records = run_suite(
        toy_corpus(),
        {AlgorithmSpec{AlgorithmKind::DP}, AlgorithmSpec{AlgorithmKind::GS}},
        {0, 7});
    REQUIRE(records.size() == 8);
    for (size_t i = 1; i < records.size(); ++i) {
        const auto key = [](const RunRecord& r) {
            return std::make_tuple(r.tape, r.algorithm, r.U);
        };
        CHECK(key(records[i - 1]) < key(records[i]));
    }
    for (const auto& r : records) {
        CHECK(r.ok);
        CHECK(r.cost >= r.lower_bound);
    }
}

TEST_CASE("parallel run matches serial run modulo timing") {
    const std::vector<AlgorithmSpec> algs{
        AlgorithmSpec{AlgorithmKind::NoDetour}, AlgorithmSpec{AlgorithmKind::GS},
        AlgorithmSpec{AlgorithmKind::FGS}, AlgorithmSpec{AlgorithmKind::DP},
        AlgorithmSpec{AlgorithmKind::SimpleDP}};
    const auto serial = run_suite(toy_corpus(), algs, {0, 3}, 1);
    const auto parallel = run_suite(toy_corpus(), algs, {0, 3}, 4);
    CHECK(csv_without_time(serial) == csv_without_time(parallel));
}

TEST_CASE("results csv round-trips") {
    const auto records = run_suite(
        toy_corpus(),
        {AlgorithmSpec{AlgorithmKind::DP}, AlgorithmSpec{AlgorithmKind::NFGS}},
        {0, 10});
    std::ostringstream out;
    write_results_csv(out, records);
    std::istringstream in(out.str());
    const auto parsed = parse_results_csv(in);
    REQUIRE(parsed.size() == records.size());
    for (size_t i = 0; i < parsed.size(); ++i) {
        CHECK(parsed[i].tape == records[i].tape);
        CHECK(parsed[i].algorithm == records[i].algorithm);
        CHECK(parsed[i].U == records[i].U);
        CHECK(parsed[i].cost == records[i].cost);
        CHECK(parsed[i].lower_bound == records[i].lower_bound);
        CHECK(parsed[i].schedule == records[i].schedule);
    }
}

TEST_CASE("profile fractions by direct count") {
    std::vector<RunRecord> records;
    auto rec = [](const std::string& tape, const std::string& alg, cost_t cost) {
        RunRecord r;
        r.tape = tape;
        r.algorithm = alg;
        r.U = 0;
        r.cost = cost;
        return r;
    };
    for (const char* tape : {"A", "B", "C"}) records.push_back(rec(tape, "DP", 100));
    records.push_back(rec("A", "H", 100));
    records.push_back(rec("B", "H", 110));
    records.push_back(rec("C", "H", 100));

    const auto points = performance_profile(records, "DP", {{0, 200}, {10, 200}});
    REQUIRE(points.size() == 4);
    auto at = [&](const std::string& alg, int64_t num) -> const ProfilePoint& {
        for (const auto& p : points)
            if (p.algorithm == alg && p.tau.num == num) return p;
        FAIL("point not found");
        static ProfilePoint dummy;
        return dummy;
    };
    CHECK(at("DP", 0).hits == 3);       // baseline against itself
    CHECK(at("H", 0).hits == 2);
    CHECK(at("H", 10).hits == 2);       // tau = 0.05: 110 > 105
    CHECK(at("H", 10).total == 3);
    CHECK(at("H", 10).fraction() == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("profile needs a complete baseline") {
    std::vector<RunRecord> records;
    RunRecord r;
    r.tape = "A";
    r.algorithm = "GS";
    r.U = 0;
    r.cost = 10;
    records.push_back(r);
    CHECK_THROWS_AS(performance_profile(records, "DP", default_tau_grid()),
                    MissingBaseline);
}

TEST_CASE("default tau grid spans 0 to 0.5") {
    const auto grid = default_tau_grid();
    REQUIRE(grid.size() == 101);
    CHECK(grid.front().value() == 0.0);
    CHECK(grid.back().value() == 0.5);
    CHECK(grid[1].value() == doctest::Approx(0.005));
}

TEST_CASE("profile csv format") {
    std::vector<ProfilePoint> points;
    ProfilePoint p;
    p.algorithm = "DP";
    p.tau = {10, 200};
    p.hits = 2;
    p.total = 3;
    points.push_back(p);
    std::ostringstream out;
    write_profile_csv(out, points);
    CHECK(out.str() == "algorithm,tau,fraction\nDP,0.05,0.666667\n");
}

TEST_CASE("profile dominance of the exact solver") {
    const auto records = run_suite(
        toy_corpus(),
        {AlgorithmSpec{AlgorithmKind::DP}, AlgorithmSpec{AlgorithmKind::GS},
         AlgorithmSpec{AlgorithmKind::SimpleDP}},
        {0, 5});
    const auto points = performance_profile(records, "DP", {{0, 200}});
    for (const auto& pt : points) {
        if (pt.algorithm == "DP") CHECK(pt.hits == pt.total);
        CHECK(pt.hits <= pt.total);
    }
}
