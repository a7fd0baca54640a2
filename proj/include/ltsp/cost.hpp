#pragma once

#include <cstdint>
#include <string>

namespace ltsp {

// Cost accumulator. Positions on real tapes reach ~2e13 length units and a
// single instance carries >1e4 requests, so per-file products approach 3e17
// and summed intermediates overflow a comfortable 64-bit margin. All cost
// arithmetic is exact 128-bit integer, never floating-point.
using cost_t = __int128;

std::string cost_to_string(cost_t v);

// Parses a decimal integer (optionally negative). Throws std::invalid_argument.
cost_t cost_from_string(const std::string& s);

}  // namespace ltsp
