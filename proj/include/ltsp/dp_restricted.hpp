#pragma once

#include "ltsp/dp_exact.hpp"

namespace ltsp {

// Window parameter for the restricted solver: window(n_req) =
// max(1, ceil(lambda * log2(n_req))) requested-file ordinals.
struct WindowParam {
    double lambda = 1.0;

    int window(int n_req) const;
};

// Window-limited variant: optimal among schedules whose detours span at most
// window(n_req) requested files. Only the detour candidate set is restricted;
// the skip recursion is unrestricted.
DpResult solve_logdp(const Instance& inst, Penalty p, WindowParam lambda,
                     const DpOptions& opts = {});

// Disjoint-detours variant: optimal among schedules whose detour intervals
// are pairwise disjoint (the final sweep is exempt).
DpResult solve_simpledp(const Instance& inst, Penalty p,
                        const DpOptions& opts = {});

}  // namespace ltsp
