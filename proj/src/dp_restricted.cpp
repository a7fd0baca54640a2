#include "ltsp/dp_restricted.hpp"

#include <cassert>
#include <cmath>
#include <unordered_map>
#include <vector>

namespace ltsp {

int WindowParam::window(int n_req) const {
    const double w = std::ceil(lambda * std::log2(static_cast<double>(n_req)));
    if (w < 1.0) return 1;
    if (w > static_cast<double>(n_req)) return n_req;
    return static_cast<int>(w);
}

DpResult solve_logdp(const Instance& inst, Penalty p, WindowParam lambda,
                     const DpOptions& opts) {
    DpOptions o = opts;
    o.window = lambda.window(inst.n_req());
    return solve_dp(inst, p, o);
}

namespace {

struct Cell {
    cost_t value = 0;
    int32_t choice = -1;  // -1 = Skip, otherwise the detour start ordinal c
};

inline uint64_t pack(int b, int64_t nskip) {
    return (static_cast<uint64_t>(b) << 32) | static_cast<uint64_t>(nskip);
}

// Disjoint-detours table over (b, nskip); the left window bound is pinned to
// the leftmost requested ordinal, so nleft(a) = 0 throughout.
struct SimpleSolver {
    const Instance& inst;
    const int64_t U;
    const std::optional<uint64_t> budget;
    std::unordered_map<uint64_t, Cell> memo;
    std::vector<cost_t> lx;  // prefix sums of x * l over requested ordinals

    explicit SimpleSolver(const Instance& i, int64_t u,
                          std::optional<uint64_t> cap)
        : inst(i), U(u), budget(cap) {
        lx.resize(inst.n_req() + 1);
        lx[0] = 0;
        for (int k = 0; k < inst.n_req(); ++k)
            lx[k + 1] = lx[k] + static_cast<cost_t>(inst.rx(k)) * inst.rl(k);
    }

    // Sum over requested ordinals f in (c, b] of 2*(l(f)-l(c))*x(f).
    cost_t inner_detour_cost(int c, int b) const {
        const auto& xp = inst.view.xprefix;
        return 2 * ((lx[b + 1] - lx[c + 1]) -
                    static_cast<cost_t>(inst.rl(c)) * (xp[b + 1] - xp[c + 1]));
    }

    const Cell* find(int b, int64_t nskip) const {
        auto it = memo.find(pack(b, nskip));
        return it == memo.end() ? nullptr : &it->second;
    }

    void store(int b, int64_t nskip, Cell c) {
        memo.emplace(pack(b, nskip), c);
        if (budget && memo.size() > *budget)
            throw CapacityError("simpledp memo exceeded cell budget");
    }

    void evaluate(int root_b) {
        struct Frame {
            int b;
            int64_t nskip;
        };
        std::vector<Frame> stack;
        stack.push_back({root_b, 0});
        while (!stack.empty()) {
            const Frame f = stack.back();
            if (find(f.b, f.nskip)) {
                stack.pop_back();
                continue;
            }
            if (f.b == 0) {
                store(0, f.nskip,
                      {2 * static_cast<cost_t>(inst.rs(0)) * f.nskip, -1});
                stack.pop_back();
                continue;
            }
            bool ready = true;
            auto need = [&](int b, int64_t nskip) {
                if (b == 0) {
                    store(0, nskip, {2 * static_cast<cost_t>(inst.rs(0)) * nskip, -1});
                    return;
                }
                if (!find(b, nskip)) {
                    ready = false;
                    stack.push_back({b, nskip});
                }
            };
            need(f.b - 1, f.nskip + inst.rx(f.b));
            for (int c = f.b; c >= 1; --c) need(c - 1, f.nskip);
            if (!ready) continue;

            const int b = f.b;
            const int64_t ns = f.nskip;
            Cell cell;
            cell.value = find(b - 1, ns + inst.rx(b))->value +
                         2 * static_cast<cost_t>(inst.rr(b) - inst.rr(b - 1)) * ns +
                         2 * static_cast<cost_t>(inst.rl(b) - inst.rr(b - 1)) *
                             inst.rx(b);
            cell.choice = -1;
            for (int c = b; c >= 1; --c) {
                cost_t v = find(c - 1, ns)->value +
                           2 * static_cast<cost_t>(inst.rr(b) - inst.rr(c - 1)) * ns +
                           2 * static_cast<cost_t>(U + inst.rr(b) - inst.rl(c)) *
                               (ns + inst.nleft(c)) +
                           inner_detour_cost(c, b);
                if (v < cell.value) {
                    cell.value = v;
                    cell.choice = c;
                }
            }
            store(b, ns, cell);
            stack.pop_back();
        }
    }

    Schedule traceback(int root_b) const {
        Schedule sched;
        int b = root_b;
        int64_t ns = 0;
        while (b > 0) {
            const Cell* cell = find(b, ns);
            assert(cell);
            if (cell->choice < 0) {
                ns += inst.rx(b);
                b -= 1;
            } else {
                sched.detours.push_back({cell->choice, b});
                b = cell->choice - 1;
            }
        }
        return sched;
    }
};

}  // namespace

DpResult solve_simpledp(const Instance& inst, Penalty p, const DpOptions& opts) {
    DpResult res;
    const int nreq = inst.n_req();
    if (nreq == 1) {
        res.cost = virtual_lb(inst, p);
        return res;
    }
    SimpleSolver s(inst, p.U, opts.cell_budget);
    s.evaluate(nreq - 1);
    res.cost = s.find(nreq - 1, 0)->value + virtual_lb(inst, p);
    res.schedule = s.traceback(nreq - 1);
    res.stats.cells = s.memo.size();
    return res;
}

}  // namespace ltsp
