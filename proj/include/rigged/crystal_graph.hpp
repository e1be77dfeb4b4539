#pragma once

#include "rigged/cartan.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace rigged {

struct ColoredEdge {
    int src = 0;
    int color = 0;
    int dst = 0;
    friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

// An edge-colored directed graph with canonical string keys per vertex and
// optional weight/cocharge decorations (present on generated crystals, may be
// absent on externally loaded graphs).
struct CrystalGraph {
    int rank = 0; // colors run 1..rank
    std::vector<std::string> keys;
    std::vector<ColoredEdge> edges; // kept sorted
    std::vector<Weight> weights;            // empty or keys.size()
    std::vector<std::int64_t> cocharges;    // empty or keys.size()

    int size() const { return static_cast<int>(keys.size()); }
    std::optional<int> find(const std::string& key) const;

    // Vertices grouped by weight (requires weight decorations).
    std::map<Weight, std::vector<int>> fibers() const;
    // Connected components of the underlying undirected graph, each sorted,
    // ordered by smallest vertex id.
    std::vector<std::vector<int>> components() const;
    // Vertices with no incoming edge of any color.
    std::vector<int> sources() const;
};

// Thrown when a closure would exceed the configured vertex cap.
class VertexLimitError : public std::runtime_error {
public:
    explicit VertexLimitError(std::int64_t cap)
        : std::runtime_error("vertex cap of " + std::to_string(cap) +
                             " exceeded while generating crystal graph") {}
};

struct GenerationLimits {
    std::int64_t max_vertices = 1'000'000;
};

// Generic closure of a set of seeds under raising/lowering maps. Breadth
// first, seeds first, discovery order = vertex id order, every edge stored in
// the lowering direction (src --color--> dst means dst = lower(src, color)).
template <typename T>
struct GeneratedSet {
    CrystalGraph graph;
    std::vector<T> elements; // parallel to graph.keys
};

template <typename T, typename Lower, typename Raise, typename Key, typename Decorate>
GeneratedSet<T> generate_closure(const std::vector<T>& seeds, int rank, Lower lower, Raise raise,
                                 Key key, Decorate decorate, const GenerationLimits& limits) {
    GeneratedSet<T> out;
    out.graph.rank = rank;
    std::unordered_map<std::string, int> index;
    std::vector<ColoredEdge> edges;

    auto intern = [&](const T& x) -> int {
        std::string k = key(x);
        auto it = index.find(k);
        if (it != index.end()) return it->second;
        if (static_cast<std::int64_t>(out.elements.size()) >= limits.max_vertices)
            throw VertexLimitError(limits.max_vertices);
        int id = static_cast<int>(out.elements.size());
        index.emplace(std::move(k), id);
        out.graph.keys.push_back(key(x));
        out.elements.push_back(x);
        decorate(x, out.graph);
        return id;
    };

    for (const auto& s : seeds) intern(s);
    for (int v = 0; v < static_cast<int>(out.elements.size()); ++v) {
        // out.elements grows while iterating; index-based loop is deliberate.
        for (int a = 1; a <= rank; ++a) {
            if (auto down = lower(out.elements[static_cast<size_t>(v)], a)) {
                int w = intern(*down);
                edges.push_back({v, a, w});
            }
            if (auto up = raise(out.elements[static_cast<size_t>(v)], a)) {
                int w = intern(*up);
                edges.push_back({w, a, v});
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    out.graph.edges = std::move(edges);
    return out;
}

} // namespace rigged
