#pragma once

#include "rigged/cartan.hpp"
#include "rigged/crystal.hpp"
#include "rigged/multiplicity.hpp"
#include "rigged/rc.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace rigged {

// Intermediate states of one promotion, for inspection and tracing. All
// entries live in the ambient algebra with one extra node (rank n for a
// classical A_{n-1} input).
struct PromotionTrace {
    std::optional<RiggedConfiguration> after_lowering; // after f_1^{l_1} ... f_n^{l_n}
    std::vector<RiggedConfiguration> after_pass;       // after each shortening pass
};

// One shortening pass: pick the smallest singular string at the last node,
// then per node k = n-1..1 the smallest singular string at least as long as
// the previous pick; shorten each pick by one box and make it singular again
// (unselected strings keep their labels). Throws std::invalid_argument when
// no admissible pick exists.
RiggedConfiguration shortening_pass(const AlgebraData& alg, const MultiplicityArray& L,
                                    const RiggedConfiguration& rc);

// The promotion operator on rigged configurations for type A_{n-1}: embed
// into A_n with an empty last node, apply f_n^{lambda_n} ... f_1^{lambda_1}
// (last node first), run the shortening pass lambda_n times, then drop the
// (again empty) last node. lambda must be the content of rc. The weight tuple
// of the result is (lambda_n, lambda_1, ..., lambda_{n-1}).
RiggedConfiguration promote(const AlgebraData& alg, const MultiplicityArray& L,
                            const RiggedConfiguration& rc, const TypeATuple& lambda,
                            PromotionTrace* trace = nullptr);

// Promotion tabulated over the whole generated set RC(L), providing the
// inverse map and the affine operators f_0 = pr^{-1} f_1 pr and
// e_0 = pr^{-1} e_1 pr. Construction verifies that promotion permutes RC(L).
class PromotionTable {
public:
    PromotionTable(const AlgebraData& alg, const MultiplicityArray& L,
                   const GenerationLimits& limits = {});

    const RcCrystal& set() const { return set_; }
    const AlgebraData& algebra() const { return alg_; }

    const RiggedConfiguration& apply(const RiggedConfiguration& rc) const;
    const RiggedConfiguration& apply_inverse(const RiggedConfiguration& rc) const;

    std::optional<RiggedConfiguration> f0(const RiggedConfiguration& rc) const;
    std::optional<RiggedConfiguration> e0(const RiggedConfiguration& rc) const;

    // Multiplicative order of the permutation.
    std::int64_t order() const;

    // Exhaustive check of pr(f_a x) = f_{a+1}(pr x) over the set, including
    // agreement of definedness; 1 <= a <= rank-1.
    struct CommutationReport {
        std::int64_t checked = 0;
        std::int64_t mismatches = 0;
    };
    CommutationReport check_commutation(int a) const;

private:
    int id_of(const RiggedConfiguration& rc) const;

    AlgebraData alg_;
    MultiplicityArray L_;
    RcCrystal set_;
    std::unordered_map<std::string, int> index_;
    std::vector<int> image_;
    std::vector<int> preimage_;
};

} // namespace rigged
