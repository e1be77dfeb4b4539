#pragma once

#include "rigged/crystal_graph.hpp"
#include "rigged/multiplicity.hpp"
#include "rigged/rc.hpp"
#include "rigged/rc_ops.hpp"

#include <optional>

namespace rigged {

// Kashiwara lowering operator f_a. Selects the string with the smallest
// nonpositive label (largest length among ties; a new string of length one
// and label -1 when no nonpositive label exists), adds a box and decreases
// the label by one; every other string keeps its colabel. Empty optional when
// phi_a = 0.
std::optional<RiggedConfiguration> f(const AlgebraData& alg, const MultiplicityArray& L,
                                     const RiggedConfiguration& rc, int a);

// Raising operator e_a. Selects the string with the smallest negative label
// (smallest length among ties), removes a box and increases the label by one
// (a length-one string disappears); every other string keeps its colabel.
// Empty optional when no negative label exists.
std::optional<RiggedConfiguration> e(const AlgebraData& alg, const MultiplicityArray& L,
                                     const RiggedConfiguration& rc, int a);

// phi_a = p_infinity - s with s the smallest nonpositive label (0 if none);
// eps_a = -s. Both equal the lengths of the f/e strings through rc.
std::int64_t phi(const AlgebraData& alg, const MultiplicityArray& L,
                 const RiggedConfiguration& rc, int a);
std::int64_t eps(const AlgebraData& alg, const MultiplicityArray& L,
                 const RiggedConfiguration& rc, int a);

// The highest-weight rigged configurations of weight lambda: admissible
// configurations with riggings 0 <= x <= p per cell. lambda must be dominant.
// Sorted by canonical encoding.
std::vector<RiggedConfiguration> highest_weight_rcs(const AlgebraData& alg,
                                                    const MultiplicityArray& L,
                                                    const Weight& lambda);

using RcCrystal = GeneratedSet<RiggedConfiguration>;

// Closure of one element under all e_a and f_a.
RcCrystal generate_component(const AlgebraData& alg, const MultiplicityArray& L,
                             const RiggedConfiguration& seed,
                             const GenerationLimits& limits = {});

// The full unrestricted set RC(L): closure of all highest-weight elements
// over every dominant weight with a nonempty configuration set.
RcCrystal generate_rc_set(const AlgebraData& alg, const MultiplicityArray& L,
                          const GenerationLimits& limits = {});

} // namespace rigged
