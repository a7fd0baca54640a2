#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "ltsp/model.hpp"
#include "ltsp/simulate.hpp"

namespace ltsp {

struct CapExceeded : Error {
    using Error::Error;
};

// Emits every set of strictly laminar detours over ordinals {0..n_req-1},
// each serialized in execution order (descending start ordinal). Enumeration
// composes recursively: pick the detour starting at the lowest free ordinal,
// recurse strictly inside it and disjointly to its right.
void enumerate_laminar(int n_req, const std::function<void(const Schedule&)>& visit,
                       int cap = 8);

// Number of strictly laminar families on n_req ordinals, via the same
// interval recurrence evaluated numerically.
uint64_t count_laminar(int n_req);

// Slow cross-check: filter all subsets of the candidate detour set by the
// pairwise laminarity test. Practical for n_req <= 4 or so.
std::vector<Schedule> enumerate_laminar_by_filtering(int n_req);

struct OracleResult {
    cost_t cost = 0;
    Schedule schedule;
};

// Filter applied to each candidate family before simulation; used to restrict
// the search to subclasses (disjoint-only, window-limited).
using ScheduleFilter = std::function<bool(const Schedule&)>;

// Ground truth by exhaustive simulation over the strictly laminar family.
// Ties broken to fewer detours, then lexicographically.
OracleResult brute_force_opt(const Instance& inst, Penalty p, int cap = 8,
                             const ScheduleFilter& filter = {});

bool all_detours_disjoint(const Schedule& sched);
bool max_span_at_most(const Schedule& sched, int window);

// Seeded generator for the verification suite: file count in [1,10], sizes in
// [1,20], multiplicities in [0,4] with at least one positive.
Instance random_instance(std::mt19937_64& rng);

}  // namespace ltsp
