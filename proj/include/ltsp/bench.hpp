#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ltsp/dataset.hpp"
#include "ltsp/model.hpp"
#include "ltsp/simulate.hpp"

namespace ltsp {

struct UnknownAlgorithm : Error {
    using Error::Error;
};
struct MissingBaseline : Error {
    using Error::Error;
};
struct BadSuiteConfig : Error {
    using Error::Error;
};

enum class AlgorithmKind {
    NoDetour,
    GS,
    FGS,
    NFGS,
    LogNFGS,
    DP,
    LogDP,
    SimpleDP,
};

struct AlgorithmSpec {
    AlgorithmKind kind = AlgorithmKind::DP;
    double lambda = 1.0;  // only meaningful for LogDP and LogNFGS

    std::string name() const;
    static AlgorithmSpec parse(const std::string& name);
};

// Runs the algorithm and returns the schedule; costs are never taken from
// solver internals.
Schedule run_algorithm(const Instance& inst, Penalty p, const AlgorithmSpec& alg);

struct RunRecord {
    std::string tape;
    std::string algorithm;
    int64_t U = 0;
    cost_t cost = 0;
    cost_t lower_bound = 0;
    double time_seconds = 0;
    Schedule schedule;
    bool ok = true;
    std::string error;  // set when ok is false
};

// One record per (instance, algorithm, U), cost recomputed by simulate on the
// returned schedule. Records are sorted by (tape, algorithm, U) regardless of
// the number of worker threads; per-record failures are flagged, not fatal.
std::vector<RunRecord> run_suite(const std::vector<CorpusEntry>& instances,
                                 const std::vector<AlgorithmSpec>& algorithms,
                                 const std::vector<int64_t>& U_values,
                                 int parallelism = 1);

// Overhead threshold tau = num/den; comparisons stay in integer arithmetic.
struct Tau {
    int64_t num = 0;
    int64_t den = 1;

    double value() const { return static_cast<double>(num) / den; }
};

// 0 to 0.5 in steps of 0.005.
std::vector<Tau> default_tau_grid();

struct ProfilePoint {
    std::string algorithm;
    Tau tau;
    int64_t hits = 0;   // groups with cost*den <= baseline*(den+num)
    int64_t total = 0;  // groups = distinct (tape, U) pairs

    double fraction() const { return static_cast<double>(hits) / total; }
};

std::vector<ProfilePoint> performance_profile(const std::vector<RunRecord>& records,
                                              const std::string& baseline_alg,
                                              const std::vector<Tau>& tau_grid);

// results.csv schema: tape,algorithm,U,cost,lower_bound,time_seconds,
// n_detours,detours with detours as a semicolon-separated a-b list.
void write_results_csv(std::ostream& out, const std::vector<RunRecord>& records);
std::vector<RunRecord> parse_results_csv(std::istream& in);

// profile.csv schema: algorithm,tau,fraction with 6-decimal fractions.
void write_profile_csv(std::ostream& out, const std::vector<ProfilePoint>& points);

}  // namespace ltsp
