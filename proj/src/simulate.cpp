#include "ltsp/simulate.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>

namespace ltsp {

cost_t virtual_lb(const Instance& inst, Penalty p) {
    cost_t lb = 0;
    for (int k = 0; k < inst.n_req(); ++k) {
        lb += static_cast<cost_t>(inst.rx(k)) *
              (static_cast<cost_t>(inst.m) - inst.rl(k) + inst.rs(k) + p.U);
    }
    return lb;
}

namespace {

enum class Dir { Left, Right };

struct Sim {
    const Instance& inst;
    const int64_t U;
    cost_t t = 0;
    int64_t p;
    Dir dir = Dir::Left;
    std::vector<bool> served;
    int64_t remaining;
    SimulationResult res;
    bool stopped = false;

    Sim(const Instance& i, int64_t u)
        : inst(i), U(u), p(i.m), served(i.n_req(), false), remaining(i.n_req()) {
        res.trajectory.push_back({0, p, EventKind::MoveTo, 0});
    }

    void turn(Dir to) {
        if (dir == to) return;
        res.trajectory.push_back({t, p, EventKind::UTurn, 0});
        ++res.uturns;
        t += U;
        dir = to;
    }

    void move_left(int64_t target) {
        assert(target <= p);
        if (target == p) return;
        turn(Dir::Left);
        t += p - target;
        p = target;
    }

    // Moves right to `target`, serving every still-unserved requested file
    // fully covered by this rightward pass. Halts at the last service when no
    // requests remain.
    void move_right(int64_t target) {
        assert(target >= p);
        if (target == p) return;
        turn(Dir::Right);
        const int64_t start = p;
        const auto& v = inst.view;
        // First requested ordinal whose left edge is within the pass.
        int k = static_cast<int>(
            std::lower_bound(v.left.begin(), v.left.end(), start) - v.left.begin());
        for (; k < inst.n_req() && v.right[k] <= target; ++k) {
            if (served[k]) continue;
            served[k] = true;
            const cost_t st = t + (v.right[k] - p);
            res.serve_time[k] = st;
            res.total_cost += static_cast<cost_t>(v.mult[k]) * st;
            res.trajectory.push_back(
                {st, v.right[k], EventKind::Serve, inst.requested[k]});
            if (--remaining == 0) {
                t = st;
                p = v.right[k];
                res.trajectory.push_back({st, p, EventKind::Stop, 0});
                stopped = true;
                return;
            }
        }
        t += target - p;
        p = target;
    }
};

}  // namespace

SimulationResult simulate(const Instance& inst, const Schedule& sched, Penalty p) {
    const auto check = validate_schedule(inst, sched);
    if (check.verdict == ScheduleVerdict::Invalid)
        throw InvalidScheduleError("invalid schedule: " + check.reason);

    Sim sim(inst, p.U);
    for (const Detour& d : sched.detours) {
        sim.move_left(inst.rl(d.a));
        sim.move_right(inst.rr(d.b));
        if (sim.stopped) break;
    }
    if (!sim.stopped) {
        sim.move_left(inst.rl(0));
        sim.move_right(inst.m);
    }
    assert(sim.stopped);
    return sim.res;
}

void export_trajectory_csv(const SimulationResult& result, std::ostream& out) {
    if (result.trajectory.empty())
        throw Error("cannot export an empty trajectory");
    out << "time,position,event\n";
    for (const auto& ev : result.trajectory) {
        out << cost_to_string(ev.time) << ',' << ev.position << ',';
        switch (ev.kind) {
            case EventKind::MoveTo: out << "MoveTo"; break;
            case EventKind::UTurn: out << "UTurn"; break;
            case EventKind::Serve: out << "Serve(" << ev.file << ')'; break;
            case EventKind::Stop: out << "Stop"; break;
        }
        out << '\n';
    }
}

void export_trajectory_svg(const Instance& inst, const SimulationResult& result,
                           std::ostream& out) {
    if (result.trajectory.empty())
        throw Error("cannot export an empty trajectory");

    // Path vertices: event points, plus the post-penalty dwell point after
    // each U-turn (the head stands still for U time units).
    cost_t t_end = result.trajectory.back().time;
    std::vector<std::pair<double, double>> pts;  // (position, time)
    cost_t penalty_u = 0;
    {
        // Recover U from the first turn dwell if any (difference between
        // consecutive vertices is not needed; we re-derive it from timing).
        // The dwell point is only cosmetic; derive it from the next event.
        for (size_t i = 0; i < result.trajectory.size(); ++i) {
            const auto& ev = result.trajectory[i];
            pts.emplace_back(static_cast<double>(ev.position),
                             static_cast<double>(ev.time));
            if (ev.kind == EventKind::UTurn && i + 1 < result.trajectory.size()) {
                const auto& nx = result.trajectory[i + 1];
                cost_t travel =
                    nx.position > ev.position ? nx.position - ev.position
                                              : ev.position - nx.position;
                cost_t dwell = (nx.time - ev.time) - travel;
                if (dwell > 0) {
                    penalty_u = dwell;
                    pts.emplace_back(static_cast<double>(ev.position),
                                     static_cast<double>(ev.time + dwell));
                }
            }
        }
        (void)penalty_u;
    }

    const double W = 800.0, H = 500.0, pad = 40.0;
    const double sx = (W - 2 * pad) / std::max<double>(1.0, static_cast<double>(inst.m));
    const double sy =
        (H - 2 * pad) / std::max<double>(1.0, static_cast<double>(t_end));
    auto X = [&](double pos) { return pad + pos * sx; };
    auto Y = [&](double time) { return pad + time * sy; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
        << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
    // File bands: requested files shaded darker.
    for (const auto& f : inst.files) {
        bool req = inst.mult[f.index - 1] > 0;
        out << "  <rect x=\"" << X(static_cast<double>(f.left)) << "\" y=\"" << pad
            << "\" width=\"" << f.size * sx << "\" height=\"" << (H - 2 * pad)
            << "\" fill=\"" << (req ? "#b8cce8" : "#e8eef7")
            << "\" stroke=\"#ffffff\"/>\n";
    }
    out << "  <polyline fill=\"none\" stroke=\"#c03030\" stroke-width=\"2\" points=\"";
    for (const auto& [pos, time] : pts) out << X(pos) << ',' << Y(time) << ' ';
    out << "\"/>\n";
    for (const auto& ev : result.trajectory) {
        if (ev.kind != EventKind::UTurn) continue;
        out << "  <circle class=\"uturn\" cx=\"" << X(static_cast<double>(ev.position))
            << "\" cy=\"" << Y(static_cast<double>(ev.time))
            << "\" r=\"4\" fill=\"#303030\"/>\n";
    }
    out << "</svg>\n";
}

}  // namespace ltsp
