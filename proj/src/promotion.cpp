#include "rigged/promotion.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rigged/checked.hpp"
#include "rigged/rc_ops.hpp"

namespace rigged {

namespace {

// Smallest length >= bound carrying a singular string at the given node;
// empty optional when there is none.
std::optional<std::int64_t> smallest_singular(const AlgebraData& alg,
                                              const MultiplicityArray& L,
                                              const RiggedConfiguration& rc,
                                              const Configuration& shape, int node,
                                              std::int64_t bound) {
    std::optional<std::int64_t> best;
    for (const RcString& s : rc.strings(node)) {
        if (s.length < bound || (best && s.length >= *best)) {
            continue;
        }
        if (s.label == vacancy(alg, L, shape, node, s.length)) {
            best = s.length;
        }
    }
    return best;
}

} // namespace

RiggedConfiguration shortening_pass(const AlgebraData& alg, const MultiplicityArray& L,
                                    const RiggedConfiguration& rc) {
    const int n = alg.rank();
    if (rc.rank() != n) {
        throw std::invalid_argument("shortening_pass: rank mismatch");
    }
    const Configuration shape = rc.shape();

    // Selection sweep from the last node down.
    std::vector<std::int64_t> picked(static_cast<size_t>(n) + 1, 0);
    std::int64_t bound = 1;
    for (int k = n; k >= 1; --k) {
        std::optional<std::int64_t> length =
            smallest_singular(alg, L, rc, shape, k, bound);
        if (!length) {
            throw std::invalid_argument("shortening pass: no singular string of length >= " +
                                        std::to_string(bound) + " at node " +
                                        std::to_string(k));
        }
        picked[static_cast<size_t>(k)] = *length;
        bound = *length;
    }

    // Remove one singular string of the picked length per node; the shortened
    // replacements get their labels assigned once the new shape is known.
    std::vector<std::vector<RcString>> strings(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const std::int64_t target = picked[static_cast<size_t>(k)];
        const std::int64_t p = vacancy(alg, L, shape, k, target);
        bool removed = false;
        for (const RcString& s : rc.strings(k)) {
            if (!removed && s.length == target && s.label == p) {
                removed = true;
                continue;
            }
            strings[static_cast<size_t>(k) - 1].push_back(s);
        }
        if (!removed) {
            throw std::logic_error("shortening pass lost its selected string");
        }
    }

    // New shape: every pick shortened by one box (length-one picks vanish).
    std::vector<std::vector<RcString>> with_short = strings;
    for (int k = 1; k <= n; ++k) {
        if (picked[static_cast<size_t>(k)] > 1) {
            with_short[static_cast<size_t>(k) - 1].push_back(
                {picked[static_cast<size_t>(k)] - 1, 0});
        }
    }
    const Configuration new_shape = RiggedConfiguration::from_strings(with_short).shape();

    for (int k = 1; k <= n; ++k) {
        if (picked[static_cast<size_t>(k)] > 1) {
            const std::int64_t len = picked[static_cast<size_t>(k)] - 1;
            strings[static_cast<size_t>(k) - 1].push_back(
                {len, vacancy(alg, L, new_shape, k, len)});
        }
    }
    return RiggedConfiguration::from_strings(std::move(strings));
}

RiggedConfiguration promote(const AlgebraData& alg, const MultiplicityArray& L,
                            const RiggedConfiguration& rc, const TypeATuple& lambda,
                            PromotionTrace* trace) {
    if (!alg.is_type_a()) {
        throw std::invalid_argument("promotion is defined for type A only");
    }
    const int n = alg.rank() + 1;
    if (lambda.n() != n) {
        throw std::invalid_argument("content tuple has " + std::to_string(lambda.n()) +
                                    " entries, expected " + std::to_string(n));
    }
    if (rc.rank() != alg.rank()) {
        throw std::invalid_argument("promotion: rank mismatch");
    }
    if (lambda.sum() != L.box_count() ||
        rc_weight(alg, L, rc.shape()) != lambda.to_weight()) {
        throw std::invalid_argument("content tuple does not match the weight of the input");
    }

    const AlgebraData ambient(Family::A, n);
    std::vector<std::vector<RcString>> embedded(static_cast<size_t>(n));
    for (int a = 1; a < n; ++a) {
        embedded[static_cast<size_t>(a) - 1] = rc.strings(a);
    }
    RiggedConfiguration cur = RiggedConfiguration::from_strings(std::move(embedded));

    for (int a = n; a >= 1; --a) {
        for (std::int64_t step = 0; step < lambda[a]; ++step) {
            std::optional<RiggedConfiguration> next = f(ambient, L, cur, a);
            if (!next) {
                throw std::invalid_argument("promotion: lowering operator " +
                                            std::to_string(a) + " undefined after " +
                                            std::to_string(step) + " steps");
            }
            cur = std::move(*next);
        }
    }

    // The longest parts must weakly decrease along the nodes at this point;
    // the shortening passes rely on it.
    const Configuration mid_shape = cur.shape();
    for (int a = 1; a < n; ++a) {
        if (mid_shape.max_part(a) < mid_shape.max_part(a + 1)) {
            throw std::logic_error("promotion: longest parts increased from node " +
                                   std::to_string(a));
        }
    }
    if (trace) {
        trace->after_lowering = cur;
        trace->after_pass.clear();
    }

    for (std::int64_t pass = 0; pass < lambda[n]; ++pass) {
        cur = shortening_pass(ambient, L, cur);
        if (trace) {
            trace->after_pass.push_back(cur);
        }
    }

    if (!cur.empty(n)) {
        throw std::logic_error("promotion: last node still occupied after the passes");
    }
    std::vector<std::vector<RcString>> restricted(static_cast<size_t>(n) - 1);
    for (int a = 1; a < n; ++a) {
        restricted[static_cast<size_t>(a) - 1] = cur.strings(a);
    }
    return RiggedConfiguration::from_strings(std::move(restricted));
}

PromotionTable::PromotionTable(const AlgebraData& alg, const MultiplicityArray& L,
                               const GenerationLimits& limits)
    : alg_(alg), L_(L), set_(generate_rc_set(alg, L, limits)) {
    if (!alg.is_type_a()) {
        throw std::invalid_argument("promotion is defined for type A only");
    }
    const int size = set_.graph.size();
    index_.reserve(static_cast<size_t>(size));
    for (int v = 0; v < size; ++v) {
        index_.emplace(set_.graph.keys[static_cast<size_t>(v)], v);
    }

    const std::int64_t boxes = L.box_count();
    image_.assign(static_cast<size_t>(size), -1);
    preimage_.assign(static_cast<size_t>(size), -1);
    for (int v = 0; v < size; ++v) {
        const Weight& w = set_.graph.weights[static_cast<size_t>(v)];
        std::vector<std::int64_t> tuple = tuple_from_weight_or_empty(w, boxes);
        if (tuple.empty()) {
            throw std::logic_error("element weight " + w.to_string() +
                                   " is not a content tuple");
        }
        const RiggedConfiguration pr =
            promote(alg_, L_, set_.elements[static_cast<size_t>(v)], TypeATuple(tuple));
        auto it = index_.find(pr.encode());
        if (it == index_.end()) {
            throw std::logic_error("promotion left the generated set at element " +
                                   set_.graph.keys[static_cast<size_t>(v)]);
        }
        image_[static_cast<size_t>(v)] = it->second;
        if (preimage_[static_cast<size_t>(it->second)] != -1) {
            throw std::logic_error("promotion is not injective on the generated set");
        }
        preimage_[static_cast<size_t>(it->second)] = v;
    }
}

int PromotionTable::id_of(const RiggedConfiguration& rc) const {
    auto it = index_.find(rc.encode());
    if (it == index_.end()) {
        throw std::invalid_argument("element does not belong to the generated set");
    }
    return it->second;
}

const RiggedConfiguration& PromotionTable::apply(const RiggedConfiguration& rc) const {
    return set_.elements[static_cast<size_t>(image_[static_cast<size_t>(id_of(rc))])];
}

const RiggedConfiguration& PromotionTable::apply_inverse(const RiggedConfiguration& rc) const {
    return set_.elements[static_cast<size_t>(preimage_[static_cast<size_t>(id_of(rc))])];
}

std::optional<RiggedConfiguration> PromotionTable::f0(const RiggedConfiguration& rc) const {
    std::optional<RiggedConfiguration> mid = f(alg_, L_, apply(rc), 1);
    if (!mid) {
        return std::nullopt;
    }
    return apply_inverse(*mid);
}

std::optional<RiggedConfiguration> PromotionTable::e0(const RiggedConfiguration& rc) const {
    std::optional<RiggedConfiguration> mid = e(alg_, L_, apply(rc), 1);
    if (!mid) {
        return std::nullopt;
    }
    return apply_inverse(*mid);
}

std::int64_t PromotionTable::order() const {
    const int size = set_.graph.size();
    std::vector<bool> seen(static_cast<size_t>(size), false);
    std::int64_t result = 1;
    for (int v = 0; v < size; ++v) {
        if (seen[static_cast<size_t>(v)]) {
            continue;
        }
        std::int64_t cycle = 0;
        int cur = v;
        do {
            seen[static_cast<size_t>(cur)] = true;
            cur = image_[static_cast<size_t>(cur)];
            ++cycle;
        } while (cur != v);
        result = std::lcm(result, cycle);
    }
    return result;
}

PromotionTable::CommutationReport PromotionTable::check_commutation(int a) const {
    if (a < 1 || a + 1 > alg_.rank()) {
        throw std::invalid_argument("commutation check needs 1 <= a <= rank-1");
    }
    CommutationReport report;
    const int size = set_.graph.size();
    for (int v = 0; v < size; ++v) {
        const RiggedConfiguration& x = set_.elements[static_cast<size_t>(v)];
        std::optional<RiggedConfiguration> down = f(alg_, L_, x, a);
        std::optional<RiggedConfiguration> other =
            f(alg_, L_, set_.elements[static_cast<size_t>(image_[static_cast<size_t>(v)])],
              a + 1);
        ++report.checked;
        if (down.has_value() != other.has_value()) {
            ++report.mismatches;
            continue;
        }
        if (down && !(apply(*down) == *other)) {
            ++report.mismatches;
        }
    }
    return report;
}

}  // namespace rigged
