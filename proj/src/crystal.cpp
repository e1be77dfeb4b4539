#include "rigged/crystal.hpp"

#include "rigged/checked.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace rigged {

namespace {

// Smallest label at the node, or nullopt when the node carries no strings.
std::optional<std::int64_t> min_label(const RiggedConfiguration& rc, int a) {
    const auto& strs = rc.strings(a);
    if (strs.empty()) return std::nullopt;
    std::int64_t m = strs.front().label;
    for (const auto& s : strs) m = std::min(m, s.label);
    return m;
}

// s = min(0, smallest label); the quantity appearing in phi_a = p_inf - s.
std::int64_t nonpositive_floor(const RiggedConfiguration& rc, int a) {
    auto m = min_label(rc, a);
    return m ? std::min<std::int64_t>(0, *m) : 0;
}

} // namespace

std::int64_t phi(const AlgebraData& alg, const MultiplicityArray& L,
                 const RiggedConfiguration& rc, int a) {
    std::int64_t p = vacancy_at_infinity(alg, L, rc.shape(), a);
    std::int64_t s = nonpositive_floor(rc, a);
    std::int64_t value = checked_sub(p, s);
    if (value < 0)
        throw std::logic_error("negative phi: rigged configuration is not valid for this L");
    return value;
}

std::int64_t eps(const AlgebraData& alg, const MultiplicityArray& L,
                 const RiggedConfiguration& rc, int a) {
    (void)alg;
    (void)L;
    return -nonpositive_floor(rc, a);
}

std::optional<RiggedConfiguration> f(const AlgebraData& alg, const MultiplicityArray& L,
                                     const RiggedConfiguration& rc, int a) {
    alg.check_node(a);
    if (phi(alg, L, rc, a) == 0) return std::nullopt;

    // Selected string: smallest nonpositive label, largest length; k = 0 and
    // s = 0 encode the creation of a fresh string (1, -1) = (k+1, s-1).
    std::int64_t s = nonpositive_floor(rc, a);
    std::int64_t k = 0;
    bool take_existing = false;
    auto m = min_label(rc, a);
    if (m && *m <= 0) {
        take_existing = true;
        for (const auto& str : rc.strings(a))
            if (str.label == s) k = std::max(k, str.length);
    }

    std::vector<std::vector<RcString>> out(static_cast<size_t>(rc.rank()));
    for (int b = 1; b <= rc.rank(); ++b) {
        std::int64_t cab = alg.cartan(a, b);
        bool removed = false;
        for (const auto& str : rc.strings(b)) {
            if (b == a && !removed && take_existing && str.length == k && str.label == s) {
                removed = true; // the selected string, re-added below
                continue;
            }
            // Unselected strings keep their colabels: the vacancy number at
            // (b, i) drops by (alpha_a|alpha_b) for i > k when a box is added
            // at length k, so the label follows suit.
            RcString t = str;
            if (cab != 0 && str.length > k) t.label = checked_sub(t.label, cab);
            out[static_cast<size_t>(b - 1)].push_back(t);
        }
    }
    out[static_cast<size_t>(a - 1)].push_back({k + 1, s - 1});
    return RiggedConfiguration::from_strings(std::move(out));
}

std::optional<RiggedConfiguration> e(const AlgebraData& alg, const MultiplicityArray& L,
                                     const RiggedConfiguration& rc, int a) {
    (void)L;
    alg.check_node(a);
    auto m = min_label(rc, a);
    if (!m || *m >= 0) return std::nullopt;

    std::int64_t s = *m;
    std::int64_t k = std::numeric_limits<std::int64_t>::max();
    for (const auto& str : rc.strings(a))
        if (str.label == s) k = std::min(k, str.length);

    std::vector<std::vector<RcString>> out(static_cast<size_t>(rc.rank()));
    for (int b = 1; b <= rc.rank(); ++b) {
        std::int64_t cab = alg.cartan(a, b);
        bool removed = false;
        for (const auto& str : rc.strings(b)) {
            if (b == a && !removed && str.length == k && str.label == s) {
                removed = true;
                continue;
            }
            // Removing a box at length k raises the vacancy number at (b, i)
            // by (alpha_a|alpha_b) for i >= k; unselected labels follow.
            RcString t = str;
            if (cab != 0 && str.length >= k) t.label = checked_add(t.label, cab);
            out[static_cast<size_t>(b - 1)].push_back(t);
        }
    }
    if (k > 1) out[static_cast<size_t>(a - 1)].push_back({k - 1, s + 1});
    return RiggedConfiguration::from_strings(std::move(out));
}

std::vector<RiggedConfiguration> highest_weight_rcs(const AlgebraData& alg,
                                                    const MultiplicityArray& L,
                                                    const Weight& lambda) {
    if (!lambda.dominant())
        throw std::invalid_argument("highest-weight enumeration requires a dominant weight");
    std::vector<RiggedConfiguration> out;
    for (const Configuration& nu : enumerate_configs(alg, L, lambda)) {
        if (!is_admissible(alg, L, nu)) continue;
        // Per cell (a, i): all weakly decreasing m-tuples of labels in
        // [0, p_i^{(a)}]; the Cartesian product over cells gives the riggings.
        struct Cell {
            int node;
            std::int64_t length;
            std::vector<std::vector<std::int64_t>> labelings;
        };
        std::vector<Cell> cells;
        bool possible = true;
        for (int a = 1; a <= alg.rank() && possible; ++a)
            for (const auto& [i, m] : nu.mult(a)) {
                std::int64_t p = vacancy(alg, L, nu, a, i);
                Cell cell{a, i, weakly_decreasing_tuples(m, 0, p)};
                if (cell.labelings.empty()) possible = false;
                cells.push_back(std::move(cell));
            }
        if (!possible) continue; // admissible implies p >= 0, so this cannot trigger
        std::vector<size_t> idx(cells.size(), 0);
        while (true) {
            std::vector<std::vector<RcString>> strings(static_cast<size_t>(alg.rank()));
            for (size_t c = 0; c < cells.size(); ++c)
                for (std::int64_t lab : cells[c].labelings[idx[c]])
                    strings[static_cast<size_t>(cells[c].node - 1)].push_back(
                        {cells[c].length, lab});
            out.push_back(RiggedConfiguration::from_strings(std::move(strings)));
            size_t c = cells.size();
            bool done = true;
            while (c > 0) {
                --c;
                if (++idx[c] < cells[c].labelings.size()) {
                    done = false;
                    break;
                }
                idx[c] = 0;
            }
            if (done) break;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RiggedConfiguration& x, const RiggedConfiguration& y) {
                  return x.encode() < y.encode();
              });
    return out;
}

namespace {

RcCrystal generate_from_seeds(const AlgebraData& alg, const MultiplicityArray& L,
                              const std::vector<RiggedConfiguration>& seeds,
                              const GenerationLimits& limits) {
    return generate_closure<RiggedConfiguration>(
        seeds, alg.rank(),
        [&](const RiggedConfiguration& x, int a) { return f(alg, L, x, a); },
        [&](const RiggedConfiguration& x, int a) { return e(alg, L, x, a); },
        [](const RiggedConfiguration& x) { return x.encode(); },
        [&](const RiggedConfiguration& x, CrystalGraph& g) {
            g.weights.push_back(rc_weight(alg, L, x.shape()));
            g.cocharges.push_back(cocharge(alg, x));
        },
        limits);
}

} // namespace

RcCrystal generate_component(const AlgebraData& alg, const MultiplicityArray& L,
                             const RiggedConfiguration& seed, const GenerationLimits& limits) {
    if (seed.rank() != alg.rank())
        throw std::invalid_argument("seed rank does not match algebra rank");
    if (!validate_rc(alg, L, seed))
        throw std::invalid_argument("seed is not a valid rigged configuration for this L "
                                    "(some string exceeds its vacancy number)");
    return generate_from_seeds(alg, L, {seed}, limits);
}

RcCrystal generate_rc_set(const AlgebraData& alg, const MultiplicityArray& L,
                          const GenerationLimits& limits) {
    const int n = alg.rank();
    std::vector<std::int64_t> rhs(static_cast<size_t>(n));
    for (int b = 1; b <= n; ++b) rhs[static_cast<size_t>(b - 1)] = L.weighted_sum(b);

    // Candidate dominant weights mu = rhs - A x over integer size vectors x.
    // The inverse Cartan matrix of a finite-type algebra is entrywise
    // positive, so 0 <= x <= A^{-1} rhs componentwise bounds the search box.
    std::vector<Rational> bound = solve_cartan(alg, rhs);
    std::vector<std::int64_t> box(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (bound[static_cast<size_t>(i)].num < 0)
            throw std::logic_error("negative size bound for nonnegative multiplicities");
        box[static_cast<size_t>(i)] =
            bound[static_cast<size_t>(i)].num / bound[static_cast<size_t>(i)].den;
    }

    std::vector<RiggedConfiguration> seeds;
    std::vector<std::int64_t> x(static_cast<size_t>(n), 0);
    while (true) {
        std::vector<std::int64_t> mu(static_cast<size_t>(n));
        bool dominant = true;
        for (int b = 1; b <= n && dominant; ++b) {
            std::int64_t v = rhs[static_cast<size_t>(b - 1)];
            for (int c = 1; c <= n; ++c)
                v = checked_sub(v, checked_mul(alg.cartan(b, c), x[static_cast<size_t>(c - 1)]));
            mu[static_cast<size_t>(b - 1)] = v;
            if (v < 0) dominant = false;
        }
        if (dominant) {
            for (auto& hw : highest_weight_rcs(alg, L, Weight(mu))) seeds.push_back(std::move(hw));
        }
        int i = n;
        while (i > 0) {
            --i;
            if (++x[static_cast<size_t>(i)] <= box[static_cast<size_t>(i)]) break;
            x[static_cast<size_t>(i)] = 0;
            if (i == 0) return generate_from_seeds(alg, L, seeds, limits);
        }
    }
}

} // namespace rigged
