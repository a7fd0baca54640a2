#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "ltsp/model.hpp"

namespace ltsp {

// Time units added at every direction change of the head.
struct Penalty {
    int64_t U = 0;
};

enum class EventKind { MoveTo, UTurn, Serve, Stop };

struct TrajectoryEvent {
    cost_t time = 0;
    int64_t position = 0;
    EventKind kind = EventKind::MoveTo;
    int file = 0;  // 1-based tape file index, Serve events only
};

struct SimulationResult {
    std::map<int, cost_t> serve_time;  // requested ordinal -> first-service time
    cost_t total_cost = 0;             // sum over requested of x * t
    int uturns = 0;
    std::vector<TrajectoryEvent> trajectory;
};

// Lower bound: each request served by its own virtual head starting at the
// right end of the tape.
cost_t virtual_lb(const Instance& inst, Penalty p);

// Executes a schedule as a head trajectory. The head starts at position m at
// time 0 moving left; every direction change costs U before post-turn
// movement. A requested file is served the first time the head crosses its
// right edge moving rightward after covering the whole file in that pass.
// Accepts LaminarValid and OrderedOnly schedules; overlapping detours are
// priced as-is (re-traversal accrues time, re-serves nothing).
SimulationResult simulate(const Instance& inst, const Schedule& sched, Penalty p);

void export_trajectory_csv(const SimulationResult& result, std::ostream& out);
void export_trajectory_svg(const Instance& inst, const SimulationResult& result,
                           std::ostream& out);

}  // namespace ltsp
