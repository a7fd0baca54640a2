#include "ltsp/greedy.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace ltsp {

DetourSet::DetourSet(const Instance& inst)
    : inst_(inst),
      end_(inst.n_req(), -1),
      covered_(inst.n_req(), false),
      unc_prefix_(inst.n_req() + 1, 0) {
    rebuild_coverage();
}

std::optional<int> DetourSet::end_of(int a) const {
    if (end_[a] < 0) return std::nullopt;
    return end_[a];
}

void DetourSet::add(int a, int b) {
    assert(a <= b && b < inst_.n_req());
    if (end_[a] >= 0)
        throw PreconditionViolated("a detour already starts at this ordinal");
    end_[a] = b;
    rebuild_coverage();
}

void DetourSet::remove_at(int a) {
    if (end_[a] < 0) return;
    end_[a] = -1;
    rebuild_coverage();
}

void DetourSet::rebuild_coverage() {
    const int nreq = inst_.n_req();
    std::fill(covered_.begin(), covered_.end(), false);
    for (int a = 0; a < nreq; ++a) {
        if (end_[a] < 0) continue;
        for (int f = a; f <= end_[a]; ++f) covered_[f] = true;
    }
    unc_prefix_[0] = 0;
    for (int f = 0; f < nreq; ++f)
        unc_prefix_[f + 1] = unc_prefix_[f] + (covered_[f] ? 0 : inst_.rx(f));
}

int64_t DetourSet::uncovered_requests(int lo, int hi) const {
    if (lo > hi) return 0;
    return unc_prefix_[hi + 1] - unc_prefix_[lo];
}

std::vector<Detour> DetourSet::detours_sorted_by_start() const {
    std::vector<Detour> out;
    for (int a = 0; a < inst_.n_req(); ++a)
        if (end_[a] >= 0) out.push_back({a, end_[a]});
    return out;
}

Schedule DetourSet::to_schedule() const {
    Schedule sched;
    for (int a = inst_.n_req() - 1; a >= 0; --a)
        if (end_[a] >= 0) sched.detours.push_back({a, end_[a]});
    return sched;
}

#ifndef NDEBUG
void DetourSet::check_consistency() const {
    const int nreq = inst_.n_req();
    std::vector<bool> cov(nreq, false);
    for (int a = 0; a < nreq; ++a)
        for (int f = a; end_[a] >= 0 && f <= end_[a]; ++f) cov[f] = true;
    assert(cov == covered_);
    int64_t acc = 0;
    for (int f = 0; f < nreq; ++f) {
        assert(unc_prefix_[f] == acc);
        acc += covered_[f] ? 0 : inst_.rx(f);
    }
    assert(unc_prefix_[nreq] == acc);
}
#endif

cost_t delta(const Instance& inst, Penalty p, const DetourSet& set, Detour cand) {
    if (set.starts_at(cand.a))
        throw PreconditionViolated("a detour in the set starts at cand.a");
    const int nreq = inst.n_req();
    const int64_t d_a = inst.rl(cand.a) - inst.rl(0);
    const int64_t pending =
        inst.nleft(cand.a) + set.uncovered_requests(cand.b + 1, nreq - 1);
    cost_t left_detours = 0;
    for (int a = 0; a < cand.a; ++a) {
        if (auto b = set.end_of(a))
            left_detours += static_cast<cost_t>(inst.rr(*b)) - inst.rl(a) + p.U;
    }
    const cost_t gain_per_request = static_cast<cost_t>(d_a) + left_detours;
    return 2 * (static_cast<cost_t>(inst.rr(cand.b)) - inst.rl(cand.a) + p.U) *
               pending -
           2 * static_cast<cost_t>(set.uncovered_requests(cand.a, cand.b)) *
               gain_per_request;
}

Schedule no_detour(const Instance&) { return {}; }

Schedule gs(const Instance& inst) {
    Schedule sched;
    for (int k = inst.n_req() - 1; k >= 0; --k) sched.detours.push_back({k, k});
    return sched;
}

namespace {

// Filter passes over the single-file detour set; returns the kept bitmap.
std::vector<bool> fgs_kept(const Instance& inst, Penalty p) {
    const int nreq = inst.n_req();
    std::vector<bool> kept(nreq, true);
    std::vector<int64_t> suffix_out(nreq + 1, 0);
    for (int pass = 0; pass < nreq; ++pass) {
        // Requests on files to the right that are no longer detoured.
        for (int f = nreq - 1; f >= 0; --f)
            suffix_out[f] = suffix_out[f + 1] + (kept[f] ? 0 : inst.rx(f));
        bool changed = false;
        cost_t prefix_in = 0;  // sum of s(g)+U over kept detours left of f
        for (int f = 0; f < nreq; ++f) {
            if (kept[f]) {
                const cost_t lhs =
                    2 * static_cast<cost_t>(inst.rx(f)) *
                    (static_cast<cost_t>(inst.rl(f) - inst.rl(0)) + prefix_in);
                const cost_t rhs = 2 * (static_cast<cost_t>(inst.rs(f)) + p.U) *
                                   (inst.nleft(f) + suffix_out[f + 1]);
                if (lhs < rhs) {
                    kept[f] = false;
                    changed = true;
                }
            }
            if (kept[f]) prefix_in += static_cast<cost_t>(inst.rs(f)) + p.U;
        }
        if (!changed) break;  // fixpoint; further passes cannot change anything
    }
    return kept;
}

Schedule nfgs_impl(const Instance& inst, Penalty p, std::optional<int> window) {
    const int nreq = inst.n_req();
    DetourSet res(inst);
    {
        const auto kept = fgs_kept(inst, p);
        for (int f = 0; f < nreq; ++f)
            if (kept[f]) res.add(f, f);
    }
    int rightest = 0;
    for (int f = 0; f < nreq; ++f) {
        const bool was_a_detour = res.end_of(f) == std::optional<int>(f);
        res.remove_at(f);
        int hi = nreq - 1;
        if (window) hi = std::min(hi, f + *window);
        int best = f;
        cost_t best_delta = delta(inst, p, res, {f, f});
        for (int f2 = f + 1; f2 <= hi; ++f2) {
            const cost_t d = delta(inst, p, res, {f, f2});
            if (d < best_delta) {
                best_delta = d;
                best = f2;
            }
        }
        // The delta bound is blind to detours covering f from the left; keep
        // the single-file detour the filter pass decided on in that case.
        const bool keep_covered = best_delta >= 0 && was_a_detour && rightest > f;
        if (keep_covered) best = f;
        if (keep_covered || best_delta < 0) {
            res.add(f, best);
            rightest = std::max(rightest, best);
        }
#ifndef NDEBUG
        res.check_consistency();
#endif
    }
    return res.to_schedule();
}

int greedy_window(double lambda, int n_req) {
    const double w = std::ceil(lambda * std::log2(static_cast<double>(n_req)));
    if (w < 1.0) return 1;
    if (w > static_cast<double>(n_req)) return n_req;
    return static_cast<int>(w);
}

}  // namespace

Schedule fgs(const Instance& inst, Penalty p) {
    const auto kept = fgs_kept(inst, p);
    Schedule sched;
    for (int f = inst.n_req() - 1; f >= 0; --f)
        if (kept[f]) sched.detours.push_back({f, f});
    return sched;
}

Schedule nfgs(const Instance& inst, Penalty p) {
    return nfgs_impl(inst, p, std::nullopt);
}

Schedule log_nfgs(const Instance& inst, Penalty p, double lambda) {
    return nfgs_impl(inst, p, greedy_window(lambda, inst.n_req()));
}

}  // namespace ltsp
