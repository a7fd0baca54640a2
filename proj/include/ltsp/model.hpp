#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ltsp/cost.hpp"

namespace ltsp {

// Errors are signalled with typed exceptions so callers (and the CLI) can
// report precise diagnostics.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};
struct EmptyTapeError : Error {
    using Error::Error;
};
struct NoRequestsError : Error {
    using Error::Error;
};
struct NonPositiveSizeError : Error {
    using Error::Error;
};
struct UnknownFileIndexError : Error {
    using Error::Error;
};
struct InvalidScheduleError : Error {
    using Error::Error;
};

// One file on the tape. Files partition the tape contiguously from position 0.
struct FileExtent {
    int index = 0;     // 1-based position of the file on the tape, leftmost = 1
    int64_t left = 0;  // tape position of the file's left edge
    int64_t size = 0;  // > 0, same length units as positions

    int64_t right() const { return left + size; }
};

// A detour over requested-file ordinals: upon first reaching the left edge of
// file a, the head proceeds to the right edge of file b and back. Ordinals are
// 0-based indices into Instance::requested, not raw tape file indices.
struct Detour {
    int a = 0;
    int b = 0;

    friend bool operator==(const Detour&, const Detour&) = default;
};

// Ordered detour list in execution order. The final sweep from the leftmost
// requested file to the rightmost unread request is implicit and never stored.
struct Schedule {
    std::vector<Detour> detours;

    friend bool operator==(const Schedule&, const Schedule&) = default;
};

enum class ScheduleVerdict {
    LaminarValid,  // non-increasing left endpoints, all pairs disjoint or strictly nested
    OrderedOnly,   // order holds but some pair intersects
    Invalid,       // order violated or b < a or ordinal out of range
};

struct ScheduleValidation {
    ScheduleVerdict verdict;
    std::string reason;  // empty unless Invalid
};

// Precomputed arrays over requested ordinals for O(1) formula evaluation.
struct RequestedView {
    std::vector<int64_t> left;    // l of the k-th requested file
    std::vector<int64_t> right;   // r of the k-th requested file
    std::vector<int64_t> size;    // s of the k-th requested file
    std::vector<int64_t> mult;    // x of the k-th requested file
    std::vector<int64_t> nleft;   // requests strictly left of ordinal k
    std::vector<int64_t> xprefix; // xprefix[k] = sum of mult[0..k-1], size n_req+1
};

// Immutable problem instance: tape layout plus request multiplicities.
class Instance {
public:
    std::vector<FileExtent> files;   // contiguous partition of [0, m)
    std::vector<int64_t> mult;       // per file (0-based over files), x >= 0
    std::vector<int> requested;      // file indices (1-based) with x > 0, increasing
    int64_t m = 0;                   // total tape length
    int64_t n = 0;                   // total request count
    RequestedView view;

    int n_req() const { return static_cast<int>(requested.size()); }
    int n_files() const { return static_cast<int>(files.size()); }

    // Accessors over requested ordinals.
    int64_t rl(int k) const { return view.left[k]; }
    int64_t rr(int k) const { return view.right[k]; }
    int64_t rs(int k) const { return view.size[k]; }
    int64_t rx(int k) const { return view.mult[k]; }
    int64_t nleft(int k) const { return view.nleft[k]; }
};

// Builds an Instance from per-file sizes and a map file index (1-based) ->
// request count. Cumulative positions are derived, requested files extracted.
Instance build_instance(const std::vector<int64_t>& sizes,
                        const std::map<int, int64_t>& multiplicities);

ScheduleValidation validate_schedule(const Instance& inst, const Schedule& sched);

}  // namespace ltsp
