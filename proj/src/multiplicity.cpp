#include "rigged/multiplicity.hpp"

#include "rigged/checked.hpp"

#include <algorithm>
#include <stdexcept>

namespace rigged {

void MultiplicityArray::set(int node, std::int64_t width, std::int64_t count) {
    if (node < 1) throw std::invalid_argument("multiplicity array: node must be >= 1");
    if (width < 1) throw std::invalid_argument("multiplicity array: width must be >= 1");
    if (count < 0) throw std::invalid_argument("multiplicity array: count must be >= 0");
    if (count == 0)
        l_.erase({node, width});
    else
        l_[{node, width}] = count;
}

void MultiplicityArray::add(int node, std::int64_t width, std::int64_t count) {
    set(node, width, checked_add(get(node, width), count));
}

std::int64_t MultiplicityArray::get(int node, std::int64_t width) const {
    auto it = l_.find({node, width});
    return it == l_.end() ? 0 : it->second;
}

std::int64_t MultiplicityArray::min_sum(int node, std::int64_t i) const {
    std::int64_t s = 0;
    for (const auto& [key, count] : l_)
        if (key.first == node) s = checked_add(s, checked_mul(std::min(i, key.second), count));
    return s;
}

std::int64_t MultiplicityArray::weighted_sum(int node) const {
    std::int64_t s = 0;
    for (const auto& [key, count] : l_)
        if (key.first == node) s = checked_add(s, checked_mul(key.second, count));
    return s;
}

std::int64_t MultiplicityArray::box_count() const {
    std::int64_t s = 0;
    for (const auto& [key, count] : l_)
        s = checked_add(s, checked_mul(checked_mul(key.first, key.second), count));
    return s;
}

std::int64_t MultiplicityArray::max_width() const {
    std::int64_t w = 0;
    for (const auto& [key, count] : l_) w = std::max(w, key.second);
    return w;
}

int MultiplicityArray::max_node() const {
    int a = 0;
    for (const auto& [key, count] : l_) a = std::max(a, key.first);
    return a;
}

} // namespace rigged
