#include "rigged/crystal_graph.hpp"

#include <algorithm>
#include <numeric>

namespace rigged {

std::optional<int> CrystalGraph::find(const std::string& key) const {
    for (size_t i = 0; i < keys.size(); ++i)
        if (keys[i] == key) return static_cast<int>(i);
    return std::nullopt;
}

std::map<Weight, std::vector<int>> CrystalGraph::fibers() const {
    if (weights.size() != keys.size())
        throw std::logic_error("graph has no weight decorations");
    std::map<Weight, std::vector<int>> out;
    for (size_t v = 0; v < keys.size(); ++v) out[weights[v]].push_back(static_cast<int>(v));
    return out;
}

std::vector<std::vector<int>> CrystalGraph::components() const {
    std::vector<int> parent(keys.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    for (const auto& e : edges) {
        int a = find(e.src), b = find(e.dst);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < size(); ++v) groups[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    out.reserve(groups.size());
    for (auto& [root, vs] : groups) out.push_back(std::move(vs));
    return out;
}

std::vector<int> CrystalGraph::sources() const {
    std::vector<bool> has_in(keys.size(), false);
    for (const auto& e : edges) has_in[static_cast<size_t>(e.dst)] = true;
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (!has_in[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

} // namespace rigged
