#include "ltsp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <thread>
#include <tuple>

#include "ltsp/dp_exact.hpp"
#include "ltsp/dp_restricted.hpp"
#include "ltsp/greedy.hpp"

namespace ltsp {

namespace {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string serialize_detours(const Schedule& sched) {
    std::string out;
    for (const Detour& d : sched.detours) {
        if (!out.empty()) out += ';';
        out += std::to_string(d.a) + "-" + std::to_string(d.b);
    }
    return out;
}

Schedule deserialize_detours(const std::string& text) {
    Schedule sched;
    size_t start = 0;
    while (start < text.size()) {
        size_t semi = text.find(';', start);
        if (semi == std::string::npos) semi = text.size();
        const std::string item = text.substr(start, semi - start);
        const size_t dash = item.find('-', 1);
        if (dash == std::string::npos)
            throw FormatError("malformed detour item '" + item + "'");
        Detour d;
        d.a = std::stoi(item.substr(0, dash));
        d.b = std::stoi(item.substr(dash + 1));
        sched.detours.push_back(d);
        start = semi + 1;
    }
    return sched;
}

}  // namespace

std::string AlgorithmSpec::name() const {
    switch (kind) {
        case AlgorithmKind::NoDetour: return "NoDetour";
        case AlgorithmKind::GS: return "GS";
        case AlgorithmKind::FGS: return "FGS";
        case AlgorithmKind::NFGS: return "NFGS";
        case AlgorithmKind::LogNFGS: return "LogNFGS(" + format_number(lambda) + ")";
        case AlgorithmKind::DP: return "DP";
        case AlgorithmKind::LogDP: return "LogDP(" + format_number(lambda) + ")";
        case AlgorithmKind::SimpleDP: return "SimpleDP";
    }
    return "?";
}

AlgorithmSpec AlgorithmSpec::parse(const std::string& name) {
    std::string base = name;
    double lambda = 1.0;
    const size_t paren = name.find('(');
    if (paren != std::string::npos) {
        if (name.back() != ')')
            throw UnknownAlgorithm("malformed algorithm name '" + name + "'");
        base = name.substr(0, paren);
        const std::string arg = name.substr(paren + 1, name.size() - paren - 2);
        try {
            size_t used = 0;
            lambda = std::stod(arg, &used);
            if (used != arg.size() || lambda <= 0) throw std::invalid_argument(arg);
        } catch (const std::exception&) {
            throw UnknownAlgorithm("bad lambda in algorithm name '" + name + "'");
        }
    }
    AlgorithmSpec spec;
    spec.lambda = lambda;
    if (base == "NoDetour") spec.kind = AlgorithmKind::NoDetour;
    else if (base == "GS") spec.kind = AlgorithmKind::GS;
    else if (base == "FGS") spec.kind = AlgorithmKind::FGS;
    else if (base == "NFGS") spec.kind = AlgorithmKind::NFGS;
    else if (base == "LogNFGS") spec.kind = AlgorithmKind::LogNFGS;
    else if (base == "DP") spec.kind = AlgorithmKind::DP;
    else if (base == "LogDP") spec.kind = AlgorithmKind::LogDP;
    else if (base == "SimpleDP") spec.kind = AlgorithmKind::SimpleDP;
    else throw UnknownAlgorithm("unknown algorithm '" + name + "'");
    return spec;
}

Schedule run_algorithm(const Instance& inst, Penalty p, const AlgorithmSpec& alg) {
    switch (alg.kind) {
        case AlgorithmKind::NoDetour: return no_detour(inst);
        case AlgorithmKind::GS: return gs(inst);
        case AlgorithmKind::FGS: return fgs(inst, p);
        case AlgorithmKind::NFGS: return nfgs(inst, p);
        case AlgorithmKind::LogNFGS: return log_nfgs(inst, p, alg.lambda);
        case AlgorithmKind::DP: return solve_dp(inst, p).schedule;
        case AlgorithmKind::LogDP:
            return solve_logdp(inst, p, WindowParam{alg.lambda}).schedule;
        case AlgorithmKind::SimpleDP: return solve_simpledp(inst, p).schedule;
    }
    throw UnknownAlgorithm("unhandled algorithm kind");
}

std::vector<RunRecord> run_suite(const std::vector<CorpusEntry>& instances,
                                 const std::vector<AlgorithmSpec>& algorithms,
                                 const std::vector<int64_t>& U_values,
                                 int parallelism) {
    if (instances.empty()) throw BadSuiteConfig("no instances");
    if (algorithms.empty()) throw BadSuiteConfig("no algorithms");
    if (U_values.empty()) throw BadSuiteConfig("no U values");

    struct Task {
        const CorpusEntry* entry;
        AlgorithmSpec alg;
        int64_t U;
    };
    std::vector<Task> tasks;
    for (const auto& e : instances)
        for (const auto& alg : algorithms)
            for (int64_t U : U_values) tasks.push_back({&e, alg, U});

    std::vector<RunRecord> records(tasks.size());
    auto worker = [&](std::atomic<size_t>& next) {
        for (size_t i = next.fetch_add(1); i < tasks.size();
             i = next.fetch_add(1)) {
            const Task& t = tasks[i];
            RunRecord rec;
            rec.tape = t.entry->name;
            rec.algorithm = t.alg.name();
            rec.U = t.U;
            const Penalty p{t.U};
            try {
                const auto start = std::chrono::steady_clock::now();
                rec.schedule = run_algorithm(t.entry->instance, p, t.alg);
                const auto stop = std::chrono::steady_clock::now();
                rec.time_seconds =
                    std::chrono::duration<double>(stop - start).count();
                rec.cost = simulate(t.entry->instance, rec.schedule, p).total_cost;
                rec.lower_bound = virtual_lb(t.entry->instance, p);
            } catch (const std::exception& ex) {
                rec.ok = false;
                rec.error = ex.what();
            }
            records[i] = std::move(rec);
        }
    };

    std::atomic<size_t> next{0};
    if (parallelism <= 1) {
        worker(next);
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < parallelism; ++t)
            threads.emplace_back([&] { worker(next); });
        for (auto& th : threads) th.join();
    }

    std::stable_sort(records.begin(), records.end(),
                     [](const RunRecord& a, const RunRecord& b) {
                         return std::tie(a.tape, a.algorithm, a.U) <
                                std::tie(b.tape, b.algorithm, b.U);
                     });
    return records;
}

std::vector<Tau> default_tau_grid() {
    std::vector<Tau> grid;
    for (int64_t i = 0; i <= 100; ++i) grid.push_back({i, 200});
    return grid;
}

std::vector<ProfilePoint> performance_profile(const std::vector<RunRecord>& records,
                                              const std::string& baseline_alg,
                                              const std::vector<Tau>& tau_grid) {
    using Group = std::pair<std::string, int64_t>;  // (tape, U)
    std::set<Group> groups;
    std::map<std::pair<Group, std::string>, const RunRecord*> by_key;
    std::set<std::string> algorithms;
    for (const auto& r : records) {
        const Group g{r.tape, r.U};
        groups.insert(g);
        algorithms.insert(r.algorithm);
        by_key[{g, r.algorithm}] = &r;
    }
    if (groups.empty()) throw MissingBaseline("no records");

    std::map<Group, cost_t> baseline;
    for (const auto& g : groups) {
        auto it = by_key.find({g, baseline_alg});
        if (it == by_key.end() || !it->second->ok)
            throw MissingBaseline("no " + baseline_alg + " record for tape " +
                                  g.first + " at U=" + std::to_string(g.second));
        baseline[g] = it->second->cost;
    }

    std::vector<ProfilePoint> points;
    for (const auto& alg : algorithms) {
        for (const Tau& tau : tau_grid) {
            ProfilePoint pt;
            pt.algorithm = alg;
            pt.tau = tau;
            pt.total = static_cast<int64_t>(groups.size());
            for (const auto& g : groups) {
                auto it = by_key.find({g, alg});
                if (it == by_key.end() || !it->second->ok) continue;
                const cost_t lhs = it->second->cost * tau.den;
                const cost_t rhs = baseline[g] * (tau.den + tau.num);
                if (lhs <= rhs) ++pt.hits;
            }
            points.push_back(std::move(pt));
        }
    }
    return points;
}

void write_results_csv(std::ostream& out, const std::vector<RunRecord>& records) {
    out << "tape,algorithm,U,cost,lower_bound,time_seconds,n_detours,detours\n";
    char buf[64];
    for (const auto& r : records) {
        out << r.tape << ',' << r.algorithm << ',' << r.U << ',';
        if (r.ok) {
            std::snprintf(buf, sizeof(buf), "%.6f", r.time_seconds);
            out << cost_to_string(r.cost) << ',' << cost_to_string(r.lower_bound)
                << ',' << buf << ',' << r.schedule.detours.size() << ','
                << serialize_detours(r.schedule) << '\n';
        } else {
            std::string msg = r.error;
            for (char& c : msg)
                if (c == ',' || c == '\n' || c == '\r') c = ' ';
            out << "NA,NA,0.000000,0,ERROR:" << msg << '\n';
        }
    }
}

std::vector<RunRecord> parse_results_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw FormatError("empty results file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "tape,algorithm,U,cost,lower_bound,time_seconds,n_detours,detours")
        throw HeaderMismatch("unexpected results.csv header");
    std::vector<RunRecord> records;
    size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        size_t start = 0;
        for (int i = 0; i < 7; ++i) {
            const size_t comma = line.find(',', start);
            if (comma == std::string::npos)
                throw FormatError("results.csv row " + std::to_string(row) +
                                  ": too few fields");
            fields.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        fields.push_back(line.substr(start));  // detours may be empty
        RunRecord rec;
        rec.tape = fields[0];
        rec.algorithm = fields[1];
        rec.U = std::stoll(fields[2]);
        if (fields[3] == "NA") {
            rec.ok = false;
            rec.error = fields[7].starts_with("ERROR:") ? fields[7].substr(6)
                                                        : fields[7];
        } else {
            rec.cost = cost_from_string(fields[3]);
            rec.lower_bound = cost_from_string(fields[4]);
            rec.time_seconds = std::stod(fields[5]);
            rec.schedule = deserialize_detours(fields[7]);
            if (rec.schedule.detours.size() !=
                static_cast<size_t>(std::stoll(fields[6])))
                throw FormatError("results.csv row " + std::to_string(row) +
                                  ": n_detours does not match the detour list");
        }
        records.push_back(std::move(rec));
    }
    return records;
}

void write_profile_csv(std::ostream& out, const std::vector<ProfilePoint>& points) {
    out << "algorithm,tau,fraction\n";
    char buf[64];
    for (const auto& p : points) {
        std::snprintf(buf, sizeof(buf), "%g,%.6f", p.tau.value(), p.fraction());
        out << p.algorithm << ',' << buf << '\n';
    }
}

}  // namespace ltsp
