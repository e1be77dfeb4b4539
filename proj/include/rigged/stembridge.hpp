#pragma once

#include "rigged/cartan.hpp"
#include "rigged/crystal_graph.hpp"

#include <string>
#include <vector>

namespace rigged {

// One concrete violation: which check, where, and what was observed.
struct AxiomWitness {
    std::string axiom;
    std::string detail; // vertex key, colors involved, observed quantities
};

struct AxiomCheck {
    std::string axiom;  // "structure", "P1", ..., "P6'"
    bool evaluated = false; // false when a prerequisite check already failed
    bool passed = false;
    std::vector<AxiomWitness> witnesses;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_passed() const;
    std::string to_string() const; // one line per check plus witnesses
};

// Checks the local characterization of simply-laced crystal graphs on an
// arbitrary edge-colored digraph:
//   P1  monochromatic paths have finite length (per-color acyclicity),
//   P2  at most one in- and one out-edge per color at every vertex,
//   P3  delta_i delta_j + delta_i phi_j = A_ij   (for e_i x defined, j != i),
//   P4  both differences <= 0,
//   P5/P6 and their duals P5'/P6': local commutation squares/octagons.
// phi/eps are read off the graph as string lengths; no rigged-configuration
// data is consulted. Checks after P2 are skipped when P1 or P2 fail.
AxiomReport verify_regular(const CrystalGraph& g, const AlgebraData& alg);

// Decides isomorphism of two crystal components by deterministic parallel
// traversal from their unique sources. Requires both graphs connected with a
// unique source and at most one edge per color and direction at each vertex;
// throws std::invalid_argument otherwise.
bool isomorphic(const CrystalGraph& g1, const CrystalGraph& g2);

} // namespace rigged
