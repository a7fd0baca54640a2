#pragma once

#include <optional>
#include <vector>

#include "ltsp/model.hpp"
#include "ltsp/simulate.hpp"

namespace ltsp {

struct PreconditionViolated : Error {
    using Error::Error;
};

// Mutable set of detours over requested ordinals, at most one per start
// ordinal, with the membership bitmap and prefix aggregates needed to
// evaluate the filter inequality and the delta bound in O(n_req).
class DetourSet {
public:
    explicit DetourSet(const Instance& inst);

    // end[a] for the detour starting at ordinal a, if any.
    std::optional<int> end_of(int a) const;
    bool starts_at(int a) const { return end_[a] >= 0; }
    bool covers(int f) const { return covered_[f]; }

    void add(int a, int b);     // no detour may already start at a
    void remove_at(int a);      // no-op when absent

    // Requests on uncovered ordinals in [lo, hi].
    int64_t uncovered_requests(int lo, int hi) const;

    std::vector<Detour> detours_sorted_by_start() const;

    // Serializes into execution order (descending start ordinal).
    Schedule to_schedule() const;

    const Instance& instance() const { return inst_; }

#ifndef NDEBUG
    void check_consistency() const;
#endif

private:
    void rebuild_coverage();

    const Instance& inst_;
    std::vector<int> end_;            // -1 when no detour starts at ordinal a
    std::vector<bool> covered_;       // ordinal lies inside some detour
    std::vector<int64_t> unc_prefix_; // prefix sums of x over uncovered ordinals
};

// Signed upper bound on the cost change of adding `cand` to the set: the
// bound is exact when no detour in the set covers or overlaps the candidate
// from the left.
cost_t delta(const Instance& inst, Penalty p, const DetourSet& set, Detour cand);

Schedule no_detour(const Instance& inst);

// One single-file detour per requested ordinal, rightmost first.
Schedule gs(const Instance& inst);

// Starts from gs and filters out detours whose removal is strictly
// beneficial against the current set, in n_req deterministic passes.
Schedule fgs(const Instance& inst, Penalty p);

// Replaces single-file detours with beneficial multi-file detours driven by
// the delta bound; keeps detours covered by longer ones where the bound is
// uninformative.
Schedule nfgs(const Instance& inst, Penalty p);

// nfgs with detour spans limited to max(1, ceil(lambda*log2(n_req))) ordinals.
Schedule log_nfgs(const Instance& inst, Penalty p, double lambda);

}  // namespace ltsp
