#include "rigged/type_a.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "rigged/checked.hpp"
#include "rigged/partitions.hpp"
#include "rigged/rc_ops.hpp"

namespace rigged {

namespace {

void require_type_a(const AlgebraData& alg, const MultiplicityArray& L,
                    const TypeATuple& lambda) {
    if (!alg.is_type_a()) {
        throw std::invalid_argument("lower-bound machinery is defined for type A only");
    }
    if (lambda.n() != alg.rank() + 1) {
        throw std::invalid_argument("content tuple has " + std::to_string(lambda.n()) +
                                    " entries, expected rank+1 = " +
                                    std::to_string(alg.rank() + 1));
    }
    if (lambda.sum() != L.box_count()) {
        throw std::invalid_argument("content sum " + std::to_string(lambda.sum()) +
                                    " does not match the tensor box count " +
                                    std::to_string(L.box_count()));
    }
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) {
        return 0;
    }
    std::int64_t value = 1;
    for (std::int64_t j = 1; j <= k; ++j) {
        value = checked_mul(value, n - k + j) / j; // exact at every step
    }
    return value;
}

// Occupied cell of a configuration with the data the formulas consume.
struct Cell {
    int node = 0;
    std::int64_t length = 0;
    std::int64_t count = 0;   // m_i^{(a)}
    std::int64_t vacancy = 0; // p_i^{(a)}
};

std::vector<Cell> occupied_cells(const AlgebraData& alg, const MultiplicityArray& L,
                                 const Configuration& nu) {
    std::vector<Cell> cells;
    for (int a = 1; a <= alg.rank(); ++a) {
        for (const auto& [length, count] : nu.mult(a)) {
            cells.push_back({a, length, count, vacancy(alg, L, nu, a, length)});
        }
    }
    return cells;
}

} // namespace

std::string LowerBoundTableau::to_string() const {
    std::ostringstream out;
    for (size_t k = 0; k < columns.size(); ++k) {
        if (k > 0) {
            out << '|';
        }
        for (size_t j = 0; j < columns[k].size(); ++j) {
            if (j > 0) {
                out << ',';
            }
            out << columns[k][j];
        }
    }
    return out.str();
}

LowerBoundTableau make_lower_bound_tableau(const TypeATuple& lambda,
                                           std::vector<std::vector<std::int64_t>> columns) {
    const std::vector<std::int64_t> c = lambda.column_lengths();
    if (columns.size() != c.size()) {
        throw std::invalid_argument("witness tableau must have " + std::to_string(c.size()) +
                                    " columns, got " + std::to_string(columns.size()));
    }
    for (size_t k = 0; k < c.size(); ++k) {
        const auto& col = columns[k];
        if (static_cast<std::int64_t>(col.size()) != c[k]) {
            throw std::invalid_argument("column " + std::to_string(k + 1) + " must have height " +
                                        std::to_string(c[k]));
        }
        const std::int64_t upper = (k == 0) ? c[0] : c[k - 1];
        for (size_t j = 0; j < col.size(); ++j) {
            if (col[j] < 1 || col[j] > upper) {
                throw std::invalid_argument("column " + std::to_string(k + 1) +
                                            " entries must lie in 1.." + std::to_string(upper));
            }
            if (j > 0 && col[j] >= col[j - 1]) {
                throw std::invalid_argument("column " + std::to_string(k + 1) +
                                            " must strictly decrease");
            }
        }
    }
    return LowerBoundTableau{std::move(columns)};
}

std::vector<LowerBoundTableau> lower_bound_tableaux(const TypeATuple& lambda) {
    const std::vector<std::int64_t> c = lambda.column_lengths();
    std::vector<std::vector<std::vector<std::int64_t>>> choices(c.size());
    for (size_t k = 0; k < c.size(); ++k) {
        const std::int64_t upper = (k == 0) ? c[0] : c[k - 1];
        choices[k] = strictly_decreasing_tuples(c[k], upper);
    }

    std::vector<LowerBoundTableau> result;
    std::vector<size_t> pick(c.size(), 0);
    while (true) {
        LowerBoundTableau t;
        t.columns.reserve(c.size());
        for (size_t k = 0; k < c.size(); ++k) {
            t.columns.push_back(choices[k][pick[k]]);
        }
        result.push_back(std::move(t));
        size_t k = c.size();
        while (k > 0 && ++pick[k - 1] == choices[k - 1].size()) {
            pick[k - 1] = 0;
            --k;
        }
        if (k == 0) {
            break;
        }
    }
    return result;
}

std::int64_t lower_bound_tableau_count(const TypeATuple& lambda) {
    const std::vector<std::int64_t> c = lambda.column_lengths();
    std::int64_t total = 1;
    for (size_t k = 0; k < c.size(); ++k) {
        const std::int64_t upper = (k == 0) ? c[0] : c[k - 1];
        total = checked_mul(total, binomial(upper, c[k]));
    }
    return total;
}

std::int64_t lower_bound(const LowerBoundTableau& t, int node, std::int64_t i) {
    if (node < 1 || node > t.width()) {
        throw std::invalid_argument("lower_bound: node " + std::to_string(node) +
                                    " outside 1.." + std::to_string(t.width()));
    }
    std::int64_t value = 0;
    for (std::int64_t entry : t.columns[static_cast<size_t>(node) - 1]) {
        if (i >= entry) {
            --value;
        }
    }
    if (node < t.width()) {
        for (std::int64_t entry : t.columns[static_cast<size_t>(node)]) {
            if (i >= entry) {
                ++value;
            }
        }
    }
    return value;
}

LaurentPolynomial q_binomial(std::int64_t m, std::int64_t width) {
    if (m < 0) {
        throw std::invalid_argument("q_binomial: negative part count");
    }
    if (m == 0) {
        return LaurentPolynomial::one();
    }
    if (width < 0) {
        return LaurentPolynomial::zero();
    }
    // dp[k] holds the generating function for a k x w box; grow w upward.
    std::vector<LaurentPolynomial> dp(static_cast<size_t>(m) + 1, LaurentPolynomial::one());
    for (std::int64_t w = 1; w <= width; ++w) {
        for (std::int64_t k = 1; k <= m; ++k) {
            dp[static_cast<size_t>(k)] +=
                dp[static_cast<size_t>(k) - 1].shifted(w);
        }
    }
    return dp[static_cast<size_t>(m)];
}

bool witness_dominates(const AlgebraData& alg, const MultiplicityArray& L,
                       const LowerBoundTableau& t, const RiggedConfiguration& rc) {
    (void)alg;
    (void)L;
    if (t.width() != rc.rank()) {
        throw std::invalid_argument("witness tableau width does not match the rank");
    }
    for (int a = 1; a <= rc.rank(); ++a) {
        for (const RcString& s : rc.strings(a)) {
            if (s.label < lower_bound(t, a, s.length)) {
                return false;
            }
        }
    }
    return true;
}

ExtendedCheck is_extended_rc(const AlgebraData& alg, const MultiplicityArray& L,
                             const TypeATuple& lambda, const RiggedConfiguration& rc) {
    require_type_a(alg, L, lambda);
    if (rc.rank() != alg.rank()) {
        throw std::invalid_argument("rigged configuration rank does not match the algebra");
    }
    if (rc_weight(alg, L, rc.shape()) != lambda.to_weight()) {
        return {};
    }
    if (!validate_rc(alg, L, rc)) {
        return {};
    }
    for (LowerBoundTableau& t : lower_bound_tableaux(lambda)) {
        if (witness_dominates(alg, L, t, rc)) {
            return {true, std::move(t)};
        }
    }
    return {};
}

std::vector<RiggedConfiguration> enumerate_extended(const AlgebraData& alg,
                                                    const MultiplicityArray& L,
                                                    const TypeATuple& lambda) {
    require_type_a(alg, L, lambda);
    const std::vector<LowerBoundTableau> witnesses = lower_bound_tableaux(lambda);
    std::map<std::string, RiggedConfiguration> found;

    for (const Configuration& nu : enumerate_configs(alg, L, lambda.to_weight())) {
        const std::vector<Cell> cells = occupied_cells(alg, L, nu);
        for (const LowerBoundTableau& t : witnesses) {
            std::vector<std::vector<std::vector<std::int64_t>>> fillings;
            fillings.reserve(cells.size());
            bool feasible = true;
            for (const Cell& cell : cells) {
                const std::int64_t floor = lower_bound(t, cell.node, cell.length);
                if (floor > cell.vacancy) {
                    feasible = false;
                    break;
                }
                fillings.push_back(
                    weakly_decreasing_tuples(cell.count, floor, cell.vacancy));
            }
            if (!feasible) {
                continue;
            }
            std::vector<size_t> pick(cells.size(), 0);
            while (true) {
                std::vector<std::vector<RcString>> strings(
                    static_cast<size_t>(alg.rank()));
                for (size_t ci = 0; ci < cells.size(); ++ci) {
                    for (std::int64_t label : fillings[ci][pick[ci]]) {
                        strings[static_cast<size_t>(cells[ci].node) - 1].push_back(
                            {cells[ci].length, label});
                    }
                }
                RiggedConfiguration rc = RiggedConfiguration::from_strings(strings);
                found.emplace(rc.encode(), std::move(rc));
                size_t ci = cells.size();
                while (ci > 0 && ++pick[ci - 1] == fillings[ci - 1].size()) {
                    pick[ci - 1] = 0;
                    --ci;
                }
                if (ci == 0) {
                    break;
                }
            }
        }
    }
    std::vector<RiggedConfiguration> result;
    result.reserve(found.size());
    for (auto& [key, rc] : found) {
        result.push_back(std::move(rc));
    }
    return result;
}

namespace {

// Flat index table for the cell rectangle {(a, i) : 1 <= i <= c_a}.
struct CellIndex {
    std::vector<std::int64_t> heights; // c_a per node
    std::vector<size_t> offsets;

    explicit CellIndex(std::vector<std::int64_t> c) : heights(std::move(c)) {
        offsets.resize(heights.size() + 1, 0);
        for (size_t a = 0; a < heights.size(); ++a) {
            offsets[a + 1] = offsets[a] + static_cast<size_t>(heights[a]);
        }
    }

    size_t total() const { return offsets.back(); }
    size_t at(int node, std::int64_t i) const {
        if (node < 1 || static_cast<size_t>(node) > heights.size() || i < 1 ||
            i > heights[static_cast<size_t>(node) - 1]) {
            throw std::logic_error("configuration cell outside the forced rectangle");
        }
        return offsets[static_cast<size_t>(node) - 1] + static_cast<size_t>(i) - 1;
    }
};

LaurentPolynomial configuration_sum(const AlgebraData& alg, const MultiplicityArray& L,
                                    const std::vector<Configuration>& configs,
                                    const CellIndex& index,
                                    const std::vector<std::int64_t>& bound,
                                    std::map<std::pair<std::int64_t, std::int64_t>,
                                             LaurentPolynomial>& qbin_memo) {
    LaurentPolynomial total;
    for (const Configuration& nu : configs) {
        std::int64_t exponent = cocharge_shape(alg, nu);
        LaurentPolynomial product = LaurentPolynomial::one();
        for (const Cell& cell : occupied_cells(alg, L, nu)) {
            const std::int64_t floor = bound[index.at(cell.node, cell.length)];
            exponent = checked_add(exponent, checked_mul(cell.count, floor));
            const std::pair<std::int64_t, std::int64_t> key{cell.count,
                                                            cell.vacancy - floor};
            auto it = qbin_memo.find(key);
            if (it == qbin_memo.end()) {
                it = qbin_memo.emplace(key, q_binomial(key.first, key.second)).first;
            }
            product = product * it->second;
            if (product.is_zero()) {
                break;
            }
        }
        total += product.shifted(exponent);
    }
    return total;
}

} // namespace

LaurentPolynomial fermionic_M(const AlgebraData& alg, const MultiplicityArray& L,
                              const TypeATuple& lambda, bool literal,
                              std::int64_t witness_limit) {
    require_type_a(alg, L, lambda);
    const std::vector<LowerBoundTableau> witnesses = lower_bound_tableaux(lambda);
    const auto count = static_cast<std::int64_t>(witnesses.size());
    if (count > witness_limit || count > 62) {
        throw std::runtime_error("witness set has " + std::to_string(count) +
                                 " tableaux; the subset sum needs 2^" + std::to_string(count) +
                                 " terms which exceeds the configured limit of 2^" +
                                 std::to_string(witness_limit));
    }

    CellIndex index(lambda.column_lengths());
    std::vector<std::vector<std::int64_t>> wvec;
    wvec.reserve(witnesses.size());
    for (const LowerBoundTableau& t : witnesses) {
        std::vector<std::int64_t> v(index.total());
        for (int a = 1; a <= static_cast<int>(index.heights.size()); ++a) {
            for (std::int64_t i = 1; i <= index.heights[static_cast<size_t>(a) - 1]; ++i) {
                v[index.at(a, i)] = lower_bound(t, a, i);
            }
        }
        wvec.push_back(std::move(v));
    }

    const std::vector<Configuration> configs =
        enumerate_configs(alg, L, lambda.to_weight());
    std::map<std::pair<std::int64_t, std::int64_t>, LaurentPolynomial> qbin_memo;
    LaurentPolynomial result;

    if (literal) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << count); ++mask) {
            std::vector<std::int64_t> bound(index.total(),
                                            std::numeric_limits<std::int64_t>::min());
            int members = 0;
            for (std::int64_t w = 0; w < count; ++w) {
                if (mask & (std::uint64_t{1} << w)) {
                    ++members;
                    for (size_t cell = 0; cell < bound.size(); ++cell) {
                        bound[cell] = std::max(bound[cell], wvec[static_cast<size_t>(w)][cell]);
                    }
                }
            }
            const std::int64_t sign = (members % 2 == 1) ? 1 : -1;
            LaurentPolynomial term =
                configuration_sum(alg, L, configs, index, bound, qbin_memo);
            result += term * LaurentPolynomial::monomial(0, sign);
        }
        return result;
    }

    // Subsets enter only through their cellwise maximum, so tally the signed
    // number of subsets per distinct max-vector first.
    std::map<std::vector<std::int64_t>, std::int64_t> signed_counts;
    std::vector<std::int64_t> cur(index.total(), std::numeric_limits<std::int64_t>::min());
    auto walk = [&](auto&& self, std::int64_t next, std::vector<std::int64_t>& acc,
                    int members) -> void {
        if (next == count) {
            if (members > 0) {
                signed_counts[acc] += (members % 2 == 1) ? 1 : -1;
            }
            return;
        }
        self(self, next + 1, acc, members);
        std::vector<std::int64_t> with(acc);
        for (size_t cell = 0; cell < with.size(); ++cell) {
            with[cell] = std::max(with[cell], wvec[static_cast<size_t>(next)][cell]);
        }
        self(self, next + 1, with, members + 1);
    };
    walk(walk, 0, cur, 0);

    for (const auto& [bound, net] : signed_counts) {
        if (net == 0) {
            continue;
        }
        LaurentPolynomial term =
            configuration_sum(alg, L, configs, index, bound, qbin_memo);
        result += term * LaurentPolynomial::monomial(0, net);
    }
    return result;
}

LaurentPolynomial cocharge_generating_function(const CrystalGraph& graph, const Weight& mu) {
    if (graph.weights.size() != static_cast<size_t>(graph.size()) ||
        graph.cocharges.size() != static_cast<size_t>(graph.size())) {
        throw std::logic_error("graph carries no weight/cocharge decorations");
    }
    LaurentPolynomial total;
    for (int v = 0; v < graph.size(); ++v) {
        if (graph.weights[static_cast<size_t>(v)] == mu) {
            total.add_term(graph.cocharges[static_cast<size_t>(v)], 1);
        }
    }
    return total;
}

LaurentPolynomial direct_M(const AlgebraData& alg, const MultiplicityArray& L,
                           const TypeATuple& lambda, const GenerationLimits& limits) {
    require_type_a(alg, L, lambda);
    const RcCrystal set = generate_rc_set(alg, L, limits);
    return cocharge_generating_function(set.graph, lambda.to_weight());
}

}  // namespace rigged
