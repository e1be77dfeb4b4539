#pragma once

#include <cstdint>
#include <vector>

namespace rigged {

// A partition is a weakly decreasing vector of positive parts.
using Partition = std::vector<std::int64_t>;

// All partitions of n >= 0, in lexicographic order ((1,1,1) < (2,1) < (3)).
std::vector<Partition> partitions_of(std::int64_t n);

// Weakly decreasing m-tuples with entries in [lo, hi]; empty list when lo > hi
// and m > 0, a single empty tuple when m = 0. Used both for riggings inside a
// box (lo = 0) and for quasipartition enumeration (lo possibly negative).
std::vector<std::vector<std::int64_t>> weakly_decreasing_tuples(std::int64_t m,
                                                                std::int64_t lo,
                                                                std::int64_t hi);

// Strictly decreasing k-subsets of {1..limit}, each returned sorted
// decreasing; enumerated in lexicographic order of the increasing reading
// ({2,1} before {3,1} before {3,2}).
std::vector<std::vector<std::int64_t>> strictly_decreasing_tuples(std::int64_t k,
                                                                  std::int64_t limit);

} // namespace rigged
