#pragma once

#include <cstdint>
#include <optional>

#include "ltsp/model.hpp"
#include "ltsp/simulate.hpp"

namespace ltsp {

struct CapacityError : Error {
    using Error::Error;
};

struct DpStats {
    uint64_t cells = 0;  // memo cells actually computed
};

struct DpResult {
    cost_t cost = 0;  // total cost (delay table value + virtual lower bound)
    Schedule schedule;
    DpStats stats;
};

struct DpOptions {
    // Detour candidates c are restricted to ordinal(b) - ordinal(c) <= window
    // when set; unset means unrestricted (exact solve).
    std::optional<int> window;
    // Abort with CapacityError when the memo exceeds this many cells.
    std::optional<uint64_t> cell_budget;
};

// Exact polynomial solve: memoized evaluation of the delay table over
// (a, b, nskip) with traceback to an optimal laminar schedule.
DpResult solve_dp(const Instance& inst, Penalty p, const DpOptions& opts = {});

}  // namespace ltsp
