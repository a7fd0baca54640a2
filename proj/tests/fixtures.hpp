#pragma once

#include <map>
#include <random>
#include <vector>

#include "ltsp/model.hpp"
#include "ltsp/oracle.hpp"

namespace fixtures {

// Three files of sizes 2,3,5; one request on file 1, two on file 3.
inline ltsp::Instance toy3() {
    return ltsp::build_instance({2, 3, 5}, {{1, 1}, {3, 2}});
}

// Four requested files separated by unrequested filler, sized so that the
// best disjoint-only schedule pays roughly 5/3 of the optimum as z grows:
// f1 at 0, f2 at 3z^2 with z^2 requests, f3 a gap of z further with z^2
// requests, f4 adjacent with size z and z requests.
inline ltsp::Instance lemma2_instance(int64_t z) {
    std::vector<int64_t> sizes;
    std::map<int, int64_t> mult;
    sizes.push_back(1);                  // f1
    mult[1] = 1;
    sizes.push_back(3 * z * z - 1);      // filler
    sizes.push_back(1);                  // f2
    mult[3] = z * z;
    sizes.push_back(z);                  // filler
    sizes.push_back(1);                  // f3
    mult[5] = z * z;
    sizes.push_back(z);                  // f4
    mult[6] = z;
    return ltsp::build_instance(sizes, mult);
}

// Window-restricted DP worst case: one far-left requested file, a block of
// z-1 adjacent requested files at 2z^3 whose first member carries z^2
// requests and whose last has size z^2 and z requests.
inline ltsp::Instance logdp_adversarial(int64_t z) {
    std::vector<int64_t> sizes;
    std::map<int, int64_t> mult;
    sizes.push_back(1);                  // f1
    mult[1] = 1;
    sizes.push_back(2 * z * z * z - 1);  // filler
    int index = 2;
    for (int64_t i = 0; i < z - 2; ++i) {
        sizes.push_back(1);
        mult[++index] = (i == 0) ? z * z : 1;
    }
    sizes.push_back(z * z);
    mult[++index] = z;
    return ltsp::build_instance(sizes, mult);
}

// Seeded instance kept within the oracle's reach.
inline ltsp::Instance small_random(std::mt19937_64& rng, int max_nreq,
                                   int64_t max_n) {
    while (true) {
        ltsp::Instance inst = ltsp::random_instance(rng);
        if (inst.n_req() <= max_nreq && inst.n <= max_n) return inst;
    }
}

}  // namespace fixtures
