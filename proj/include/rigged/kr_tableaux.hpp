#pragma once

#include "rigged/cartan.hpp"
#include "rigged/crystal_graph.hpp"
#include "rigged/partitions.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rigged {

// A rectangular semistandard tableau: rows weakly increase, columns strictly
// increase, entries in 1..n. Cells are stored row-major.
struct RectTableau {
    int rows = 0;
    int cols = 0;
    std::vector<int> cells;

    int at(int row, int col) const { // 1-based
        return cells.at(static_cast<size_t>(row - 1) * static_cast<size_t>(cols) +
                        static_cast<size_t>(col - 1));
    }
    // Reading order: columns right to left, each column top to bottom.
    std::vector<size_t> reading_order() const;
    std::string to_string() const; // rows '/'-joined, entries ','-joined: "1,1/2,3"

    friend bool operator==(const RectTableau&, const RectTableau&) = default;
};

// Semistandard fillings of an r x s rectangle with entries 1..n, enumerated
// by backtracking in row-major lexicographic order.
std::vector<RectTableau> kr_vertices(int r, int s, int n);

// Number of semistandard tableaux of the given shape with entries 1..n,
// counted by plain backtracking (no formula).
std::int64_t ssyt_count(const Partition& shape, int n);

// A tensor element written the way words are displayed: factors[0] is the
// leftmost displayed factor; the rightmost displayed factor is the first
// tensor slot, so the signature scan runs through the factors in reverse
// display order.
struct TensorPath {
    std::vector<RectTableau> factors;

    std::string encode() const; // factor strings joined with '|'
    friend bool operator==(const TensorPath&, const TensorPath&) = default;
};

// Letter content (count of each letter 1..n).
std::vector<std::int64_t> path_content(const TensorPath& p, int n);
Weight path_weight(const TensorPath& p, int n);

// Signature rule on the concatenated reading words: letter a maps to '+',
// letter a+1 to '-', a '+' immediately left of a '-' cancels, f_a raises the
// letter of the leftmost surviving '+', e_a lowers the letter of the
// rightmost surviving '-'.
std::optional<TensorPath> path_f(const TensorPath& p, int a, int n);
std::optional<TensorPath> path_e(const TensorPath& p, int a, int n);
std::int64_t path_phi(const TensorPath& p, int a, int n);
std::int64_t path_eps(const TensorPath& p, int a, int n);

struct KrShape {
    int r = 1;
    int s = 1;
};

// All tensor elements for the given factor shapes (display order), the
// rightmost factor varying fastest.
std::vector<TensorPath> enumerate_paths(const std::vector<KrShape>& shapes, int n);

using PathCrystal = GeneratedSet<TensorPath>;

// Closure of one element under all e_a and f_a, decorated with weights.
PathCrystal generate_path_component(const TensorPath& seed, int n,
                                    const GenerationLimits& limits = {});

// The whole tensor crystal with every element interned, plus all edges.
PathCrystal generate_path_set(const std::vector<KrShape>& shapes, int n,
                              const GenerationLimits& limits = {});

} // namespace rigged
