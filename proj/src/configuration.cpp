#include "rigged/configuration.hpp"

#include "rigged/checked.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rigged {

Configuration::Configuration(int rank) {
    if (rank < 1) throw std::invalid_argument("configuration rank must be >= 1");
    mult_.resize(static_cast<size_t>(rank));
}

Configuration Configuration::from_partitions(const std::vector<Partition>& parts) {
    Configuration cfg(static_cast<int>(parts.size()));
    for (size_t a = 0; a < parts.size(); ++a) {
        const Partition& p = parts[a];
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i] < 1) throw std::invalid_argument("partition parts must be positive");
            if (i + 1 < p.size() && p[i] < p[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
            ++cfg.mult_[a][p[i]];
        }
    }
    return cfg;
}

void Configuration::check_node(int node) const {
    if (node < 1 || node > rank()) throw std::invalid_argument("configuration node out of range");
}

const std::map<std::int64_t, std::int64_t>& Configuration::mult(int node) const {
    check_node(node);
    return mult_[static_cast<size_t>(node - 1)];
}

std::int64_t Configuration::m(int node, std::int64_t i) const {
    const auto& mm = mult(node);
    auto it = mm.find(i);
    return it == mm.end() ? 0 : it->second;
}

std::int64_t Configuration::size(int node) const {
    std::int64_t s = 0;
    for (const auto& [i, m] : mult(node)) s = checked_add(s, checked_mul(i, m));
    return s;
}

std::int64_t Configuration::min_sum(int node, std::int64_t i) const {
    std::int64_t s = 0;
    for (const auto& [j, m] : mult(node)) s = checked_add(s, checked_mul(std::min(i, j), m));
    return s;
}

std::int64_t Configuration::max_part(int node) const {
    const auto& mm = mult(node);
    return mm.empty() ? 0 : mm.rbegin()->first;
}

std::int64_t Configuration::max_part() const {
    std::int64_t w = 0;
    for (int a = 1; a <= rank(); ++a) w = std::max(w, max_part(a));
    return w;
}

Partition Configuration::partition(int node) const {
    Partition p;
    const auto& mm = mult(node);
    for (auto it = mm.rbegin(); it != mm.rend(); ++it)
        for (std::int64_t c = 0; c < it->second; ++c) p.push_back(it->first);
    return p;
}

std::string Configuration::to_string() const {
    std::ostringstream os;
    for (int a = 1; a <= rank(); ++a) {
        if (a > 1) os << '|';
        Partition p = partition(a);
        os << '(';
        for (size_t i = 0; i < p.size(); ++i) {
            if (i) os << ',';
            os << p[i];
        }
        os << ')';
    }
    return os.str();
}

} // namespace rigged
