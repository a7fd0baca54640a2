#include "ltsp/model.hpp"

#include <algorithm>

namespace ltsp {

Instance build_instance(const std::vector<int64_t>& sizes,
                        const std::map<int, int64_t>& multiplicities) {
    if (sizes.empty()) throw EmptyTapeError("tape has no files");
    Instance inst;
    inst.files.reserve(sizes.size());
    int64_t pos = 0;
    for (size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1)
            throw NonPositiveSizeError("file " + std::to_string(i + 1) +
                                       " has non-positive size");
        inst.files.push_back(FileExtent{static_cast<int>(i + 1), pos, sizes[i]});
        pos += sizes[i];
    }
    inst.m = pos;
    inst.mult.assign(sizes.size(), 0);
    for (const auto& [idx, count] : multiplicities) {
        if (idx < 1 || idx > static_cast<int>(sizes.size()))
            throw UnknownFileIndexError("request on unknown file index " +
                                        std::to_string(idx));
        if (count < 0)
            throw Error("negative multiplicity on file " + std::to_string(idx));
        inst.mult[idx - 1] = count;
    }
    for (size_t i = 0; i < inst.mult.size(); ++i) {
        if (inst.mult[i] > 0) {
            inst.requested.push_back(static_cast<int>(i + 1));
            inst.n += inst.mult[i];
        }
    }
    if (inst.requested.empty()) throw NoRequestsError("no positive multiplicity");

    auto& v = inst.view;
    const int nreq = inst.n_req();
    v.left.resize(nreq);
    v.right.resize(nreq);
    v.size.resize(nreq);
    v.mult.resize(nreq);
    v.nleft.resize(nreq);
    v.xprefix.resize(nreq + 1);
    v.xprefix[0] = 0;
    for (int k = 0; k < nreq; ++k) {
        const FileExtent& f = inst.files[inst.requested[k] - 1];
        v.left[k] = f.left;
        v.right[k] = f.right();
        v.size[k] = f.size;
        v.mult[k] = inst.mult[inst.requested[k] - 1];
        v.nleft[k] = v.xprefix[k];
        v.xprefix[k + 1] = v.xprefix[k] + v.mult[k];
    }
    return inst;
}

ScheduleValidation validate_schedule(const Instance& inst, const Schedule& sched) {
    const int nreq = inst.n_req();
    for (const Detour& d : sched.detours) {
        if (d.a < 0 || d.b >= nreq)
            return {ScheduleVerdict::Invalid, "detour ordinal out of range"};
        if (d.b < d.a) return {ScheduleVerdict::Invalid, "detour with b < a"};
    }
    // Execution-order test: left endpoints non-increasing.
    for (size_t i = 1; i < sched.detours.size(); ++i) {
        if (sched.detours[i].a > sched.detours[i - 1].a)
            return {ScheduleVerdict::Invalid, "left endpoints increase"};
    }
    // Laminarity pair-test, order-insensitive: every pair must be
    // position-disjoint or strictly nested (a1 < a2 <= b2 < b1).
    for (size_t i = 0; i < sched.detours.size(); ++i) {
        for (size_t j = i + 1; j < sched.detours.size(); ++j) {
            const Detour& x = sched.detours[i];
            const Detour& y = sched.detours[j];
            const bool disjoint = x.b < y.a || y.b < x.a;
            const bool nested = (x.a < y.a && y.b < x.b) || (y.a < x.a && x.b < y.b);
            if (!disjoint && !nested)
                return {ScheduleVerdict::OrderedOnly, ""};
        }
    }
    return {ScheduleVerdict::LaminarValid, ""};
}

}  // namespace ltsp
