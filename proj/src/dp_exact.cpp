#include "ltsp/dp_exact.hpp"

#include <cassert>
#include <unordered_map>
#include <vector>

namespace ltsp {

namespace {

struct Cell {
    cost_t value = 0;
    int32_t choice = -1;  // -1 = Skip, otherwise the detour start ordinal c
};

inline uint64_t pack(int a, int b, int64_t nskip) {
    return (static_cast<uint64_t>(a) << 48) | (static_cast<uint64_t>(b) << 32) |
           static_cast<uint64_t>(nskip);
}

struct Solver {
    const Instance& inst;
    const int64_t U;
    const std::optional<int> window;
    const std::optional<uint64_t> budget;
    std::unordered_map<uint64_t, Cell> memo;

    Cell base(int b, int64_t nskip) const {
        return {2 * static_cast<cost_t>(inst.rs(b)) * (nskip + inst.nleft(b)), -1};
    }

    int lowest_candidate(int a, int b) const {
        int lo = a + 1;
        if (window && b - *window > lo) lo = b - *window;
        return lo;
    }

    const Cell* find(int a, int b, int64_t nskip) const {
        auto it = memo.find(pack(a, b, nskip));
        return it == memo.end() ? nullptr : &it->second;
    }

    void store(int a, int b, int64_t nskip, Cell c) {
        memo.emplace(pack(a, b, nskip), c);
        if (budget && memo.size() > *budget)
            throw CapacityError("dp memo exceeded cell budget");
    }

    // Evaluates the root cell with an explicit work stack; recursion depth
    // would otherwise reach n_req on skip chains.
    void evaluate(int root_a, int root_b, int64_t root_nskip) {
        struct Frame {
            int a, b;
            int64_t nskip;
        };
        std::vector<Frame> stack;
        stack.push_back({root_a, root_b, root_nskip});
        while (!stack.empty()) {
            const Frame f = stack.back();
            if (find(f.a, f.b, f.nskip)) {
                stack.pop_back();
                continue;
            }
            if (f.a == f.b) {
                store(f.a, f.b, f.nskip, base(f.b, f.nskip));
                stack.pop_back();
                continue;
            }
            bool ready = true;
            auto need = [&](int a, int b, int64_t nskip) {
                if (a == b) {
                    store(a, b, nskip, base(b, nskip));
                    return;
                }
                if (!find(a, b, nskip)) {
                    ready = false;
                    stack.push_back({a, b, nskip});
                }
            };
            need(f.a, f.b - 1, f.nskip + inst.rx(f.b));
            for (int c = f.b; c >= lowest_candidate(f.a, f.b); --c) {
                need(f.a, c - 1, f.nskip);
                need(c, f.b, f.nskip);
            }
            if (!ready) continue;

            const int a = f.a, b = f.b;
            const int64_t ns = f.nskip;
            Cell cell;
            cell.value = find(a, b - 1, ns + inst.rx(b))->value +
                         2 * static_cast<cost_t>(inst.rr(b) - inst.rr(b - 1)) *
                             (ns + inst.nleft(a)) +
                         2 * static_cast<cost_t>(inst.rl(b) - inst.rr(b - 1)) *
                             inst.rx(b);
            cell.choice = -1;
            // Descending c with strict improvement: ties go to Skip first,
            // then to the largest c (shortest detour, fewest U-turns).
            for (int c = b; c >= lowest_candidate(a, b); --c) {
                cost_t v = find(a, c - 1, ns)->value + find(c, b, ns)->value +
                           2 * static_cast<cost_t>(inst.rr(b) - inst.rr(c - 1)) *
                               (ns + inst.nleft(a)) +
                           2 * static_cast<cost_t>(U) * (ns + inst.nleft(c));
                if (v < cell.value) {
                    cell.value = v;
                    cell.choice = c;
                }
            }
            store(a, b, ns, cell);
            stack.pop_back();
        }
    }

    Schedule traceback(int root_a, int root_b, int64_t root_nskip) const {
        Schedule sched;
        struct Task {
            bool emit;  // emit the detour instead of visiting a cell
            int a, b;
            int64_t nskip;
        };
        std::vector<Task> stack;
        stack.push_back({false, root_a, root_b, root_nskip});
        while (!stack.empty()) {
            const Task t = stack.back();
            stack.pop_back();
            if (t.emit) {
                sched.detours.push_back({t.a, t.b});
                continue;
            }
            if (t.a == t.b) continue;
            const Cell* cell = find(t.a, t.b, t.nskip);
            assert(cell);
            if (cell->choice < 0) {
                stack.push_back({false, t.a, t.b - 1, t.nskip + inst.rx(t.b)});
            } else {
                const int c = cell->choice;
                // Execution order: inner subtree of (c,b), the detour (c,b)
                // itself, then the outer subtree left of c.
                stack.push_back({false, t.a, c - 1, t.nskip});
                stack.push_back({true, c, t.b, 0});
                stack.push_back({false, c, t.b, t.nskip});
            }
        }
        return sched;
    }
};

}  // namespace

DpResult solve_dp(const Instance& inst, Penalty p, const DpOptions& opts) {
    DpResult res;
    const int nreq = inst.n_req();
    if (nreq == 1) {
        res.cost = virtual_lb(inst, p);
        return res;
    }
    Solver s{inst, p.U, opts.window, opts.cell_budget, {}};
    s.evaluate(0, nreq - 1, 0);
    res.cost = s.find(0, nreq - 1, 0)->value + virtual_lb(inst, p);
    res.schedule = s.traceback(0, nreq - 1, 0);
    res.stats.cells = s.memo.size();
    return res;
}

}  // namespace ltsp
