#include "rigged/kr_tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rigged {

std::vector<size_t> RectTableau::reading_order() const {
    std::vector<size_t> order;
    order.reserve(cells.size());
    for (int col = cols; col >= 1; --col) {
        for (int row = 1; row <= rows; ++row) {
            order.push_back(static_cast<size_t>(row - 1) * static_cast<size_t>(cols) +
                            static_cast<size_t>(col - 1));
        }
    }
    return order;
}

std::string RectTableau::to_string() const {
    std::ostringstream out;
    for (int row = 1; row <= rows; ++row) {
        if (row > 1) {
            out << '/';
        }
        for (int col = 1; col <= cols; ++col) {
            if (col > 1) {
                out << ',';
            }
            out << at(row, col);
        }
    }
    return out.str();
}

namespace {

std::vector<RectTableau> ssyt_fillings(const std::vector<std::int64_t>& row_lengths, int n,
                                       bool build, std::int64_t* count_out) {
    // Cells in row-major order; each candidate letter must weakly exceed the
    // left neighbour and strictly exceed the upper neighbour.
    struct Slot {
        int row;
        int col;
    };
    std::vector<Slot> slots;
    for (size_t r = 0; r < row_lengths.size(); ++r) {
        if (r + 1 < row_lengths.size() && row_lengths[r] < row_lengths[r + 1]) {
            throw std::invalid_argument("shape rows must weakly decrease");
        }
        for (std::int64_t c = 0; c < row_lengths[r]; ++c) {
            slots.push_back({static_cast<int>(r), static_cast<int>(c)});
        }
    }

    const size_t rows = row_lengths.size();
    std::vector<std::vector<int>> grid(rows);
    for (size_t r = 0; r < rows; ++r) {
        grid[r].assign(static_cast<size_t>(row_lengths[r]), 0);
    }

    std::vector<RectTableau> out;
    std::int64_t count = 0;
    auto dfs = [&](auto&& self, size_t next) -> void {
        if (next == slots.size()) {
            ++count;
            if (build) {
                RectTableau t;
                t.rows = static_cast<int>(rows);
                t.cols = rows == 0 ? 0 : static_cast<int>(row_lengths[0]);
                for (const auto& row : grid) {
                    t.cells.insert(t.cells.end(), row.begin(), row.end());
                }
                out.push_back(std::move(t));
            }
            return;
        }
        const auto [r, c] = slots[next];
        int lo = 1;
        if (c > 0) {
            lo = std::max(lo, grid[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
        }
        if (r > 0) {
            lo = std::max(lo, grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
        }
        // The column below still needs strictly larger letters; prune when
        // even the largest letter cannot finish the column.
        int below = 0;
        for (size_t rr = static_cast<size_t>(r) + 1; rr < rows; ++rr) {
            if (static_cast<std::int64_t>(c) < row_lengths[rr]) {
                ++below;
            } else {
                break;
            }
        }
        for (int letter = lo; letter + below <= n; ++letter) {
            grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = letter;
            self(self, next + 1);
        }
        grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
    };
    dfs(dfs, 0);
    if (count_out) {
        *count_out = count;
    }
    return out;
}

} // namespace

std::vector<RectTableau> kr_vertices(int r, int s, int n) {
    if (r < 1 || s < 1 || n < 1) {
        throw std::invalid_argument("kr_vertices: r, s, n must be positive");
    }
    std::vector<std::int64_t> rows(static_cast<size_t>(r), s);
    return ssyt_fillings(rows, n, true, nullptr);
}

std::int64_t ssyt_count(const Partition& shape, int n) {
    for (std::int64_t part : shape) {
        if (part < 0) {
            throw std::invalid_argument("ssyt_count: negative part");
        }
    }
    std::vector<std::int64_t> rows;
    for (std::int64_t part : shape) {
        if (part > 0) {
            rows.push_back(part);
        }
    }
    std::int64_t count = 0;
    ssyt_fillings(rows, n, false, &count);
    return count;
}

std::string TensorPath::encode() const {
    std::ostringstream out;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) {
            out << '|';
        }
        out << factors[i].to_string();
    }
    return out.str();
}

std::vector<std::int64_t> path_content(const TensorPath& p, int n) {
    std::vector<std::int64_t> content(static_cast<size_t>(n), 0);
    for (const RectTableau& t : p.factors) {
        for (int letter : t.cells) {
            if (letter < 1 || letter > n) {
                throw std::invalid_argument("letter outside 1..n");
            }
            ++content[static_cast<size_t>(letter) - 1];
        }
    }
    return content;
}

Weight path_weight(const TensorPath& p, int n) {
    const std::vector<std::int64_t> content = path_content(p, n);
    std::vector<std::int64_t> coords(static_cast<size_t>(n) - 1);
    for (size_t a = 0; a + 1 < static_cast<size_t>(n); ++a) {
        coords[a] = content[a] - content[a + 1];
    }
    return Weight(std::move(coords));
}

namespace {

struct ScanRef {
    size_t factor;
    size_t cell;
};

// Factors in reverse display order; Japanese reading within each factor.
std::vector<ScanRef> scan_refs(const TensorPath& p) {
    std::vector<ScanRef> refs;
    for (size_t i = p.factors.size(); i-- > 0;) {
        for (size_t cell : p.factors[i].reading_order()) {
            refs.push_back({i, cell});
        }
    }
    return refs;
}

struct Signature {
    std::vector<size_t> plus;  // surviving '+' positions, left to right
    std::vector<size_t> minus; // surviving '-' positions, left to right
};

Signature bracket(const TensorPath& p, const std::vector<ScanRef>& refs, int a) {
    Signature sig;
    for (size_t k = 0; k < refs.size(); ++k) {
        const int letter = p.factors[refs[k].factor].cells[refs[k].cell];
        if (letter == a) {
            sig.plus.push_back(k);
        } else if (letter == a + 1) {
            if (!sig.plus.empty()) {
                sig.plus.pop_back();
            } else {
                sig.minus.push_back(k);
            }
        }
    }
    return sig;
}

void check_color(int a, int n) {
    if (a < 1 || a >= n) {
        throw std::invalid_argument("color must lie in 1..n-1");
    }
}

} // namespace

std::optional<TensorPath> path_f(const TensorPath& p, int a, int n) {
    check_color(a, n);
    const std::vector<ScanRef> refs = scan_refs(p);
    const Signature sig = bracket(p, refs, a);
    if (sig.plus.empty()) {
        return std::nullopt;
    }
    const ScanRef target = refs[sig.plus.front()];
    TensorPath next = p;
    next.factors[target.factor].cells[target.cell] += 1;
    return next;
}

std::optional<TensorPath> path_e(const TensorPath& p, int a, int n) {
    check_color(a, n);
    const std::vector<ScanRef> refs = scan_refs(p);
    const Signature sig = bracket(p, refs, a);
    if (sig.minus.empty()) {
        return std::nullopt;
    }
    const ScanRef target = refs[sig.minus.back()];
    TensorPath next = p;
    next.factors[target.factor].cells[target.cell] -= 1;
    return next;
}

std::int64_t path_phi(const TensorPath& p, int a, int n) {
    check_color(a, n);
    return static_cast<std::int64_t>(bracket(p, scan_refs(p), a).plus.size());
}

std::int64_t path_eps(const TensorPath& p, int a, int n) {
    check_color(a, n);
    return static_cast<std::int64_t>(bracket(p, scan_refs(p), a).minus.size());
}

std::vector<TensorPath> enumerate_paths(const std::vector<KrShape>& shapes, int n) {
    std::vector<std::vector<RectTableau>> choices;
    choices.reserve(shapes.size());
    for (const KrShape& shape : shapes) {
        choices.push_back(kr_vertices(shape.r, shape.s, n));
    }
    std::vector<TensorPath> out;
    std::vector<size_t> pick(shapes.size(), 0);
    while (true) {
        TensorPath p;
        p.factors.reserve(shapes.size());
        for (size_t i = 0; i < shapes.size(); ++i) {
            p.factors.push_back(choices[i][pick[i]]);
        }
        out.push_back(std::move(p));
        size_t i = shapes.size();
        while (i > 0 && ++pick[i - 1] == choices[i - 1].size()) {
            pick[i - 1] = 0;
            --i;
        }
        if (i == 0) {
            break;
        }
    }
    return out;
}

namespace {

PathCrystal closure_of(const std::vector<TensorPath>& seeds, int n,
                       const GenerationLimits& limits) {
    return generate_closure<TensorPath>(
        seeds, n - 1,
        [n](const TensorPath& p, int a) { return path_f(p, a, n); },
        [n](const TensorPath& p, int a) { return path_e(p, a, n); },
        [](const TensorPath& p) { return p.encode(); },
        [n](const TensorPath& p, CrystalGraph& g) { g.weights.push_back(path_weight(p, n)); },
        limits);
}

} // namespace

PathCrystal generate_path_component(const TensorPath& seed, int n,
                                    const GenerationLimits& limits) {
    if (n < 2) {
        throw std::invalid_argument("need at least two letters");
    }
    return closure_of({seed}, n, limits);
}

PathCrystal generate_path_set(const std::vector<KrShape>& shapes, int n,
                              const GenerationLimits& limits) {
    if (n < 2) {
        throw std::invalid_argument("need at least two letters");
    }
    if (shapes.empty()) {
        throw std::invalid_argument("need at least one tensor factor");
    }
    return closure_of(enumerate_paths(shapes, n), n, limits);
}

}  // namespace rigged
