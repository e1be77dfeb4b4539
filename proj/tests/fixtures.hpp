#pragma once

// Shared fixtures for the unit tests and the acceptance suite: the standard
// instance battery (sizes independently known as products of the tensor
// factor sizes) plus small builders used all over the tests.

#include "rigged/cartan.hpp"
#include "rigged/multiplicity.hpp"
#include "rigged/rc.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fixtures {

struct LEntry {
    int node;
    std::int64_t width;
    std::int64_t count;
};

inline rigged::MultiplicityArray make_L(const std::vector<LEntry>& entries) {
    rigged::MultiplicityArray L;
    for (const auto& e : entries) L.add(e.node, e.width, e.count);
    return L;
}

struct BatteryInstance {
    std::string name;
    rigged::Family family;
    int rank;
    std::vector<LEntry> entries;
    std::int64_t size; // expected |RC(L)|, the product of the factor sizes
};

// Factor sizes used below: |B^{1,1}| = rank+1 in type A_rank, |B^{1,3}| = 10
// and |B^{2,2}| = 6 for A_2, |B^{2,2}| = 20 for A_3, |B^{2,1}| = 29 for D_4.
inline const std::vector<BatteryInstance>& battery() {
    static const std::vector<BatteryInstance> b = {
        {"A1, two single boxes", rigged::Family::A, 1, {{1, 1, 2}}, 4},
        {"A1, four single boxes", rigged::Family::A, 1, {{1, 1, 4}}, 16},
        {"A2, cube of B^{1,1}", rigged::Family::A, 2, {{1, 1, 3}}, 27},
        {"A2, B^{1,1} x B^{1,3} x B^{2,2}", rigged::Family::A, 2,
         {{1, 1, 1}, {1, 3, 1}, {2, 2, 1}}, 180},
        {"A3, cube of B^{1,1}", rigged::Family::A, 3, {{1, 1, 3}}, 64},
        {"A3, sixth power of B^{1,1}", rigged::Family::A, 3, {{1, 1, 6}}, 4096},
        {"A3, single B^{2,2}", rigged::Family::A, 3, {{2, 2, 1}}, 20},
        {"D4, single B^{2,1}", rigged::Family::D, 4, {{2, 1, 1}}, 29},
    };
    return b;
}

inline rigged::AlgebraData algebra_of(const BatteryInstance& b) {
    return rigged::AlgebraData(b.family, b.rank);
}

} // namespace fixtures
