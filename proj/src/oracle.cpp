#include "ltsp/oracle.hpp"

#include <algorithm>
#include <map>

namespace ltsp {

namespace {

using Family = std::vector<Detour>;

// Families over the ordinal interval [lo, hi], decomposed on the detour
// starting at lo (if any) with its strict inside and its disjoint right part.
const std::vector<Family>& families(int lo, int hi,
                                    std::map<std::pair<int, int>, std::vector<Family>>& memo) {
    if (lo > hi) {
        static const std::vector<Family> empty{{}};
        return empty;
    }
    auto it = memo.find({lo, hi});
    if (it != memo.end()) return it->second;
    std::vector<Family> out;
    for (const Family& f : families(lo + 1, hi, memo)) out.push_back(f);
    for (int b = lo; b <= hi; ++b) {
        const auto& inside = families(lo + 1, b - 1, memo);
        const auto& outside = families(b + 1, hi, memo);
        for (const Family& in : inside) {
            for (const Family& rest : outside) {
                Family f;
                f.push_back({lo, b});
                f.insert(f.end(), in.begin(), in.end());
                f.insert(f.end(), rest.begin(), rest.end());
                out.push_back(std::move(f));
            }
        }
    }
    return memo.emplace(std::make_pair(lo, hi), std::move(out)).first->second;
}

Schedule to_execution_order(Family f) {
    // Strict nesting forbids equal starts, so descending start is unique.
    std::sort(f.begin(), f.end(),
              [](const Detour& x, const Detour& y) { return x.a > y.a; });
    return Schedule{std::move(f)};
}

bool pair_laminar(const Detour& x, const Detour& y) {
    const bool disjoint = x.b < y.a || y.b < x.a;
    const bool nested = (x.a < y.a && y.b < x.b) || (y.a < x.a && x.b < y.b);
    return disjoint || nested;
}

}  // namespace

void enumerate_laminar(int n_req, const std::function<void(const Schedule&)>& visit,
                       int cap) {
    if (n_req > cap)
        throw CapExceeded("laminar enumeration capped at n_req = " +
                          std::to_string(cap));
    std::map<std::pair<int, int>, std::vector<Family>> memo;
    for (const Family& f : families(0, n_req - 1, memo))
        visit(to_execution_order(f));
}

uint64_t count_laminar(int n_req) {
    // c[n] = families over n ordinals.
    std::vector<uint64_t> c(static_cast<size_t>(n_req) + 1, 0);
    c[0] = 1;
    for (int n = 1; n <= n_req; ++n) {
        uint64_t total = 2 * c[n - 1];  // no detour at lo, or (lo,lo)
        for (int k = 2; k <= n; ++k)    // detour (lo, lo+k-1)
            total += c[k - 2] * c[n - k];
        c[n] = total;
    }
    return c[n_req];
}

std::vector<Schedule> enumerate_laminar_by_filtering(int n_req) {
    std::vector<Detour> candidates;
    for (int a = 0; a < n_req; ++a)
        for (int b = a; b < n_req; ++b) candidates.push_back({a, b});
    const size_t nc = candidates.size();
    if (nc > 20) throw CapExceeded("subset filtering is limited to tiny n_req");
    std::vector<Schedule> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << nc); ++mask) {
        Family f;
        for (size_t i = 0; i < nc; ++i)
            if (mask & (uint64_t{1} << i)) f.push_back(candidates[i]);
        bool ok = true;
        for (size_t i = 0; ok && i < f.size(); ++i)
            for (size_t j = i + 1; ok && j < f.size(); ++j)
                ok = pair_laminar(f[i], f[j]);
        if (ok) out.push_back(to_execution_order(std::move(f)));
    }
    return out;
}

bool all_detours_disjoint(const Schedule& sched) {
    const auto& d = sched.detours;
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = i + 1; j < d.size(); ++j)
            if (!(d[i].b < d[j].a || d[j].b < d[i].a)) return false;
    return true;
}

bool max_span_at_most(const Schedule& sched, int window) {
    for (const Detour& d : sched.detours)
        if (d.b - d.a > window) return false;
    return true;
}

OracleResult brute_force_opt(const Instance& inst, Penalty p, int cap,
                             const ScheduleFilter& filter) {
    OracleResult best;
    bool have = false;
    enumerate_laminar(
        inst.n_req(),
        [&](const Schedule& sched) {
            if (filter && !filter(sched)) return;
            const cost_t cost = simulate(inst, sched, p).total_cost;
            auto tie_key = [](const Schedule& s) {
                std::vector<std::pair<int, int>> k;
                for (const Detour& d : s.detours) k.emplace_back(d.a, d.b);
                return k;
            };
            if (!have || cost < best.cost ||
                (cost == best.cost &&
                 (sched.detours.size() < best.schedule.detours.size() ||
                  (sched.detours.size() == best.schedule.detours.size() &&
                   tie_key(sched) < tie_key(best.schedule))))) {
                best = {cost, sched};
                have = true;
            }
        },
        cap);
    return best;
}

Instance random_instance(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nf_dist(1, 10);
    std::uniform_int_distribution<int64_t> size_dist(1, 20);
    std::uniform_int_distribution<int64_t> mult_dist(0, 4);
    const int nf = nf_dist(rng);
    std::vector<int64_t> sizes(nf);
    for (auto& s : sizes) s = size_dist(rng);
    std::map<int, int64_t> mult;
    for (int i = 1; i <= nf; ++i) {
        int64_t x = mult_dist(rng);
        if (x > 0) mult[i] = x;
    }
    if (mult.empty()) {
        std::uniform_int_distribution<int> pick(1, nf);
        std::uniform_int_distribution<int64_t> pos_mult(1, 4);
        mult[pick(rng)] = pos_mult(rng);
    }
    return build_instance(sizes, mult);
}

}  // namespace ltsp
