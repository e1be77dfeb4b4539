#pragma once

#include "rigged/cartan.hpp"
#include "rigged/crystal.hpp"
#include "rigged/laurent.hpp"
#include "rigged/multiplicity.hpp"
#include "rigged/rc.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rigged {

// Column-strict witness tableau controlling the permitted negative labels in
// type A. For a content tuple lambda = (lambda_1..lambda_n), column k
// (k = 1..n-1) has height c_k = lambda_{k+1} + ... + lambda_n, entries
// strictly decreasing top to bottom, drawn from {1..c_{k-1}} with c_0 = c_1.
// Column 1 is therefore always forced to be (c_1, c_1 - 1, ..., 1).
struct LowerBoundTableau {
    std::vector<std::vector<std::int64_t>> columns; // columns[k-1], top to bottom

    int width() const { return static_cast<int>(columns.size()); }
    std::string to_string() const; // columns joined with '|': "4,3,2,1|4,2|1"

    friend bool operator==(const LowerBoundTableau&, const LowerBoundTableau&) = default;
    friend auto operator<=>(const LowerBoundTableau& s, const LowerBoundTableau& t) {
        return s.columns <=> t.columns;
    }
};

// Validates the column heights, entry ranges and strict decrease for lambda;
// throws std::invalid_argument on violation.
LowerBoundTableau make_lower_bound_tableau(const TypeATuple& lambda,
                                           std::vector<std::vector<std::int64_t>> columns);

// All witness tableaux for lambda. Columns vary left to right with the
// rightmost column fastest; each column runs through its strictly decreasing
// fillings in lexicographic order of the increasing reading.
std::vector<LowerBoundTableau> lower_bound_tableaux(const TypeATuple& lambda);

// |A| = prod_k binom(c_{k-1}, c_k) without enumerating.
std::int64_t lower_bound_tableau_count(const TypeATuple& lambda);

// The cell bound M_i^{(a)}(t) = -sum_{j<=c_a} chi(i >= t_{j,a})
//                              + sum_{j<=c_{a+1}} chi(i >= t_{j,a+1}).
std::int64_t lower_bound(const LowerBoundTableau& t, int node, std::int64_t i);

// Generating function of partitions with at most m parts, each part at most
// width: 1 when m = 0, zero when width < 0 and m > 0.
LaurentPolynomial q_binomial(std::int64_t m, std::int64_t width);

// True when every label of rc is at least the bound of t at its cell (the
// quasipartition floor; the ceiling label <= p is checked separately).
bool witness_dominates(const AlgebraData& alg, const MultiplicityArray& L,
                       const LowerBoundTableau& t, const RiggedConfiguration& rc);

struct ExtendedCheck {
    bool member = false;
    // First witness in enumeration order; empty when not a member.
    std::optional<LowerBoundTableau> witness;
};

// Membership of rc in the extended set for (L, lambda): the shape must have
// weight lambda, all labels lie weakly below the vacancy numbers, and one
// single witness tableau bounds every cell from below.
ExtendedCheck is_extended_rc(const AlgebraData& alg, const MultiplicityArray& L,
                             const TypeATuple& lambda, const RiggedConfiguration& rc);

// The full extended set for (L, lambda): union over witnesses of the per-cell
// quasipartition fillings, duplicates removed, sorted by encoding.
std::vector<RiggedConfiguration> enumerate_extended(const AlgebraData& alg,
                                                    const MultiplicityArray& L,
                                                    const TypeATuple& lambda);

// Closed combinatorial evaluation of M(L, lambda) = sum over the weight
// fiber of q^{cocharge}: inclusion-exclusion over nonempty witness subsets S,
//   sum_S (-1)^{|S|+1} sum_{nu} q^{cc(nu) + sum m_i^(a) M_i^(a)(S)}
//         prod qbin(m_i^(a), p_i^(a) - M_i^(a)(S)),
// with M(S) the cellwise maximum over S. Subsets enter only through their
// max-vector, so they are tallied by signed count per distinct max-vector;
// `literal` instead performs the configuration sum once per subset (reference
// path, exponential). Throws std::runtime_error when the witness count
// exceeds witness_limit (the subset lattice would be 2^count).
LaurentPolynomial fermionic_M(const AlgebraData& alg, const MultiplicityArray& L,
                              const TypeATuple& lambda, bool literal = false,
                              std::int64_t witness_limit = 20);

// Sum of q^{cocharge} over the weight-mu fiber of a generated set.
LaurentPolynomial cocharge_generating_function(const CrystalGraph& graph, const Weight& mu);

// M(L, lambda) from the crystal itself: generates the closure of the
// highest-weight elements and sums q^{cocharge} over the lambda fiber.
LaurentPolynomial direct_M(const AlgebraData& alg, const MultiplicityArray& L,
                           const TypeATuple& lambda, const GenerationLimits& limits = {});

} // namespace rigged
