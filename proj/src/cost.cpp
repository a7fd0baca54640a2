#include "ltsp/cost.hpp"

#include <algorithm>
#include <stdexcept>

namespace ltsp {

std::string cost_to_string(cost_t v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    std::string out;
    while (u > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

cost_t cost_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty cost literal");
    size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = (s[0] == '-');
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("bad cost literal: " + s);
    cost_t v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("bad cost literal: " + s);
        v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
}

}  // namespace ltsp
