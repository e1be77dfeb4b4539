#pragma once

#include "rigged/cartan.hpp"
#include "rigged/configuration.hpp"
#include "rigged/multiplicity.hpp"
#include "rigged/rc.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rigged {

// Vacancy number p_i^{(a)} = sum_j min(i,j) L_j^{(a)}
//                          - sum_{(b,j)} (alpha_a|alpha_b) min(i,j) m_j^{(b)}.
// Evaluated from scratch every time; the incremental updates used by the
// crystal operators live in crystal.cpp and are cross-checked against this.
std::int64_t vacancy(const AlgebraData& alg, const MultiplicityArray& L,
                     const Configuration& nu, int node, std::int64_t i);

// Stable value of p_i^{(a)} for i beyond every part and tensor width; equals
// <h_a, wt(nu)>.
std::int64_t vacancy_at_infinity(const AlgebraData& alg, const MultiplicityArray& L,
                                 const Configuration& nu, int node);

// Solves the Cartan system for the partition sizes |nu^{(a)}| forced by
// (L, Lambda); empty optional when the solution is not a nonnegative integer
// vector (then no configuration exists).
std::optional<std::vector<std::int64_t>> config_sizes(const AlgebraData& alg,
                                                      const MultiplicityArray& L,
                                                      const Weight& lambda);

// All configurations with the forced sizes, as the Cartesian product of the
// partitions of each size, each node enumerated in lexicographic order.
std::vector<Configuration> enumerate_configs(const AlgebraData& alg, const MultiplicityArray& L,
                                             const Weight& lambda);

// wt(nu, J) in fundamental-weight coordinates; depends only on the shape.
Weight rc_weight(const AlgebraData& alg, const MultiplicityArray& L, const Configuration& nu);

// cc(nu) = 1/2 sum (alpha_a|alpha_b) min(j,k) m_j^{(a)} m_k^{(b)}.
std::int64_t cocharge_shape(const AlgebraData& alg, const Configuration& nu);
// cc(nu, J) = cc(nu) + sum of all labels. Constant on crystal components.
std::int64_t cocharge(const AlgebraData& alg, const RiggedConfiguration& rc);

// All vacancy numbers nonnegative on the support (the classical
// admissibility defining highest-weight rigged configurations).
bool is_admissible(const AlgebraData& alg, const MultiplicityArray& L, const Configuration& nu);

// Structural validity of an unrestricted rigged configuration: every string
// has nonnegative colabel p_i^{(a)} - x.
bool validate_rc(const AlgebraData& alg, const MultiplicityArray& L,
                 const RiggedConfiguration& rc);

// Exact solve of (Cartan matrix) x = rhs over the rationals; returns
// numerator/denominator pairs in lowest terms with positive denominators.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};
std::vector<Rational> solve_cartan(const AlgebraData& alg, const std::vector<std::int64_t>& rhs);

} // namespace rigged
