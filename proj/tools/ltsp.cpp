#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "ltsp/bench.hpp"
#include "ltsp/dataset.hpp"
#include "ltsp/dp_exact.hpp"
#include "ltsp/oracle.hpp"
#include "ltsp/simulate.hpp"

namespace {

using nlohmann::json;

json cost_json(ltsp::cost_t c) {
    if (c >= INT64_MIN && c <= INT64_MAX) return static_cast<int64_t>(c);
    return ltsp::cost_to_string(c);
}

ltsp::Instance load_instance(const std::string& tape_path,
                             const std::string& requests_path) {
    const auto tape = ltsp::read_tape_file(tape_path, "tape");
    const auto req = ltsp::read_request_file(requests_path, "tape");
    return ltsp::to_instance(tape, req);
}

ltsp::AlgorithmSpec resolve_alg(const std::string& name, double lambda) {
    auto spec = ltsp::AlgorithmSpec::parse(name);
    if (name.find('(') == std::string::npos) spec.lambda = lambda;
    return spec;
}

struct SolveArgs {
    std::string tape, requests, alg = "DP";
    int64_t uturn = 0;
    double lambda = 1.0;
};

int cmd_solve(const SolveArgs& a) {
    const auto inst = load_instance(a.tape, a.requests);
    const auto spec = resolve_alg(a.alg, a.lambda);
    const ltsp::Penalty p{a.uturn};
    const auto sched = ltsp::run_algorithm(inst, p, spec);
    const auto sim = ltsp::simulate(inst, sched, p);
    json j;
    j["algorithm"] = spec.name();
    j["U"] = a.uturn;
    j["cost"] = cost_json(sim.total_cost);
    j["lower_bound"] = cost_json(ltsp::virtual_lb(inst, p));
    j["n_detours"] = sched.detours.size();
    json detours = json::array();
    for (const auto& d : sched.detours) detours.push_back({d.a, d.b});
    j["detours"] = detours;
    std::cout << j.dump() << "\n";
    return 0;
}

struct BenchArgs {
    std::string corpus, out = "results.csv";
    std::vector<std::string> uturns;
    std::vector<std::string> algs;
    int jobs = 1;
};

int cmd_bench(const BenchArgs& a) {
    const auto entries = ltsp::parse_corpus(a.corpus);
    std::vector<int64_t> U_values;
    for (const auto& u : a.uturns) {
        if (u == "half" || u == "full") {
            const auto pen = ltsp::derive_penalties(entries);
            U_values.push_back(u == "half" ? pen.half : pen.full);
        } else {
            U_values.push_back(std::stoll(u));
        }
    }
    if (U_values.empty()) U_values.push_back(0);
    std::vector<ltsp::AlgorithmSpec> algorithms;
    std::vector<std::string> names =
        a.algs.empty()
            ? std::vector<std::string>{"NoDetour", "GS", "FGS", "NFGS",
                                       "LogNFGS(1)", "DP", "LogDP(1)", "SimpleDP"}
            : a.algs;
    for (const auto& n : names) algorithms.push_back(ltsp::AlgorithmSpec::parse(n));
    const auto records = ltsp::run_suite(entries, algorithms, U_values, a.jobs);
    std::ofstream out(a.out, std::ios::binary);
    if (!out) throw ltsp::Error("cannot write " + a.out);
    ltsp::write_results_csv(out, records);
    int failed = 0;
    for (const auto& r : records)
        if (!r.ok) {
            ++failed;
            std::cerr << "failed: " << r.tape << " " << r.algorithm
                      << " U=" << r.U << ": " << r.error << "\n";
        }
    std::cerr << records.size() << " records (" << failed << " failed) -> "
              << a.out << "\n";
    return failed == 0 ? 0 : 1;
}

struct ProfileArgs {
    std::string results, baseline = "DP", out = "profile.csv";
};

int cmd_profile(const ProfileArgs& a) {
    std::ifstream in(a.results, std::ios::binary);
    if (!in) throw ltsp::MissingFile("cannot open " + a.results);
    const auto records = ltsp::parse_results_csv(in);
    const auto points = ltsp::performance_profile(records, a.baseline,
                                                  ltsp::default_tau_grid());
    std::ofstream out(a.out, std::ios::binary);
    if (!out) throw ltsp::Error("cannot write " + a.out);
    ltsp::write_profile_csv(out, points);
    return 0;
}

int cmd_stats(const std::string& corpus) {
    const auto entries = ltsp::parse_corpus(corpus);
    const auto stats = ltsp::corpus_stats(entries);
    const auto pen = ltsp::derive_penalties(entries);
    auto print_int = [](const char* label, const ltsp::IntAggregate& a) {
        std::cout << label << ": max " << a.max << ", min " << a.min
                  << ", median " << a.median << ", mean " << a.mean << "\n";
    };
    std::cout << "tapes: " << entries.size() << "\n";
    print_int("files per tape", stats.n_f);
    print_int("requested files per tape", stats.n_req);
    print_int("total requests per tape", stats.n);
    const double gb = 1e9;
    std::printf("mean file size (GB): max %.1f, min %.1f, median %.1f, mean %.1f\n",
                stats.mean_size.max / gb, stats.mean_size.min / gb,
                stats.mean_size.median / gb, stats.mean_size.mean / gb);
    std::printf(
        "file size CV (%%): max %.0f, min %.0f, median %.0f, mean %.0f\n",
        stats.size_cv.max * 100, stats.size_cv.min * 100,
        stats.size_cv.median * 100, stats.size_cv.mean * 100);
    std::cout << "penalties: half " << pen.half << ", full " << pen.full << "\n";
    return 0;
}

struct TraceArgs {
    std::string tape, requests, alg = "DP", svg, csv;
    int64_t uturn = 0;
    double lambda = 1.0;
};

int cmd_trace(const TraceArgs& a) {
    const auto inst = load_instance(a.tape, a.requests);
    const auto spec = resolve_alg(a.alg, a.lambda);
    const ltsp::Penalty p{a.uturn};
    const auto sched = ltsp::run_algorithm(inst, p, spec);
    const auto sim = ltsp::simulate(inst, sched, p);
    if (!a.svg.empty()) {
        std::ofstream out(a.svg, std::ios::binary);
        if (!out) throw ltsp::Error("cannot write " + a.svg);
        ltsp::export_trajectory_svg(inst, sim, out);
    }
    if (!a.csv.empty()) {
        std::ofstream out(a.csv, std::ios::binary);
        if (!out) throw ltsp::Error("cannot write " + a.csv);
        ltsp::export_trajectory_csv(sim, out);
    }
    std::cout << "cost " << ltsp::cost_to_string(sim.total_cost) << ", "
              << sim.uturns << " u-turns\n";
    return 0;
}

struct ValidateArgs {
    uint64_t seed = 0;
    int count = 1000;
    int cap = 6;
};

int cmd_validate(const ValidateArgs& a) {
    std::mt19937_64 rng(a.seed);
    const int64_t U_values[] = {0, 1, 5, 1000};
    int checked = 0;
    for (int i = 0; i < a.count; ++i) {
        ltsp::Instance inst = ltsp::random_instance(rng);
        while (inst.n_req() > a.cap) inst = ltsp::random_instance(rng);
        for (int64_t U : U_values) {
            const ltsp::Penalty p{U};
            const auto dp = ltsp::solve_dp(inst, p);
            const auto oracle = ltsp::brute_force_opt(inst, p, a.cap);
            ++checked;
            if (dp.cost != oracle.cost) {
                std::cerr << "mismatch at instance " << i << " U=" << U
                          << ": dp " << ltsp::cost_to_string(dp.cost)
                          << " vs oracle " << ltsp::cost_to_string(oracle.cost)
                          << "\n";
                return 1;
            }
        }
    }
    std::cout << checked << " checks passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear tape scheduling: exact and heuristic solvers"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "solve one instance");
    solve->add_option("--tape", solve_args.tape)->required();
    solve->add_option("--requests", solve_args.requests)->required();
    solve->add_option("--alg", solve_args.alg);
    solve->add_option("--uturn", solve_args.uturn);
    solve->add_option("--lambda", solve_args.lambda);

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "run the benchmark suite");
    bench->add_option("--corpus", bench_args.corpus)->required();
    bench->add_option("--out", bench_args.out);
    bench->add_option("--uturn", bench_args.uturns);
    bench->add_option("--alg", bench_args.algs);
    bench->add_option("--jobs", bench_args.jobs);

    ProfileArgs profile_args;
    auto* profile = app.add_subcommand("profile", "performance profile from results");
    profile->add_option("--results", profile_args.results)->required();
    profile->add_option("--baseline", profile_args.baseline);
    profile->add_option("--out", profile_args.out);

    std::string stats_corpus;
    auto* stats = app.add_subcommand("stats", "corpus statistics");
    stats->add_option("--corpus", stats_corpus)->required();

    TraceArgs trace_args;
    auto* trace = app.add_subcommand("trace", "export a head trajectory");
    trace->add_option("--tape", trace_args.tape)->required();
    trace->add_option("--requests", trace_args.requests)->required();
    trace->add_option("--alg", trace_args.alg);
    trace->add_option("--uturn", trace_args.uturn);
    trace->add_option("--lambda", trace_args.lambda);
    trace->add_option("--svg", trace_args.svg);
    trace->add_option("--csv", trace_args.csv);

    ValidateArgs validate_args;
    auto* validate = app.add_subcommand("validate", "random oracle verification");
    validate->add_option("--seed", validate_args.seed);
    validate->add_option("--count", validate_args.count);
    validate->add_option("--cap", validate_args.cap);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(solve_args);
        if (bench->parsed()) return cmd_bench(bench_args);
        if (profile->parsed()) return cmd_profile(profile_args);
        if (stats->parsed()) return cmd_stats(stats_corpus);
        if (trace->parsed()) return cmd_trace(trace_args);
        if (validate->parsed()) return cmd_validate(validate_args);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
