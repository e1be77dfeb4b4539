#pragma once

#include "rigged/cartan.hpp"
#include "rigged/crystal_graph.hpp"
#include "rigged/laurent.hpp"
#include "rigged/multiplicity.hpp"
#include "rigged/rc.hpp"
#include "rigged/type_a.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace rigged {

// DOT text for an edge-colored graph; vertices labeled by their keys, edges
// by their colors. Deterministic byte-for-byte.
std::string graph_to_dot(const CrystalGraph& g);

// JSON form: {"rank", "vertices": [{"id","key"[,"weight","cocharge"]}],
// "edges": [[src, color, dst]]}; loading validates shape and ranges and
// throws std::invalid_argument on malformed input.
nlohmann::json graph_to_json(const CrystalGraph& g);
CrystalGraph graph_from_json(const nlohmann::json& j);

// Rigged configuration as one array of string lists per node:
// [[[length, label], ...], ...].
nlohmann::json rc_to_json(const RiggedConfiguration& rc);
RiggedConfiguration rc_from_json(const nlohmann::json& j);

// Witness tableau as row lists (row-major, rows weakly shrink).
nlohmann::json tableau_to_json(const LowerBoundTableau& t);

// Visual form: one '#' per box with the label to the right of its row, the
// vacancy number to the left when requested; "(empty)" for empty nodes.
std::string render_rc(const AlgebraData& alg, const MultiplicityArray& L,
                      const RiggedConfiguration& rc, bool show_vacancies);

// One "q^e: c" line per term, ascending exponents; "0" for the zero
// polynomial.
std::string polynomial_lines(const LaurentPolynomial& p);

// A problem instance: algebra, tensor multiplicities, optional weight or
// type-A content tuple, optional rigged configuration. Unknown JSON keys are
// rejected.
struct Instance {
    AlgebraData algebra;
    MultiplicityArray L;
    std::optional<TypeATuple> lambda;
    std::optional<Weight> weight;
    std::optional<RiggedConfiguration> rc;
};

Instance instance_from_json(const nlohmann::json& j);
Instance load_instance(const std::string& path);

} // namespace rigged
