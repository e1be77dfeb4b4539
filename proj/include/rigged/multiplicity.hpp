#pragma once

#include <cstdint>
#include <map>
#include <utility>

namespace rigged {

// The multiplicity array L: (node a, width i) -> L_i^{(a)}, the number of
// tensor factors B^{a,i}. Only positive counts are stored.
class MultiplicityArray {
public:
    using Key = std::pair<int, std::int64_t>; // (node, width)

    MultiplicityArray() = default;

    // count = 0 erases; negative counts and widths < 1 are rejected.
    void set(int node, std::int64_t width, std::int64_t count);
    void add(int node, std::int64_t width, std::int64_t count);

    std::int64_t get(int node, std::int64_t width) const;
    const std::map<Key, std::int64_t>& entries() const { return l_; }
    bool empty() const { return l_.empty(); }

    // sum_i min(i,j) L_j^{(node)} over all widths j.
    std::int64_t min_sum(int node, std::int64_t i) const;
    // sum_i i * L_i^{(node)}.
    std::int64_t weighted_sum(int node) const;
    // Total box count sum_{(a,i)} a * i * L_i^{(a)} of the underlying tensor product.
    std::int64_t box_count() const;
    std::int64_t max_width() const; // 0 when empty
    int max_node() const;           // 0 when empty

private:
    std::map<Key, std::int64_t> l_;
};

} // namespace rigged
