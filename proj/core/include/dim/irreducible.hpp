#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dim/coloring.hpp"
#include "dim/graph.hpp"

namespace dim {

// A claw component x; a1, a2, a3 outside every triangle, a2 a leaf, a1 and
// a3 attached to triangle vertices v and u.
struct ClawComponent {
  VertexId x, a1, a2, a3, v, u;
};

// Triangle with a degree-4 vertex r and degree-2 vertices p, q.
struct HubTriangle {
  VertexId r, p, q;
};

struct IrreducibleDecomposition {
  std::vector<VertexId> triangle_vertices;
  std::vector<ClawComponent> claws;
  std::vector<HubTriangle> hubs;
  std::vector<VertexId> hub_sides;  // every p and q
  std::vector<VertexId> core;       // triangle vertices minus hub sides and blacks
  std::vector<VertexId> candidates; // core plus every a2
};

// First structural property of an irreducible pair that fails, if any.
std::optional<std::string> irreducible_violation(const Graph& g, const PartialColoring& c);

inline bool assert_irreducible_structure(const Graph& g, const PartialColoring& c) {
  return !irreducible_violation(g, c).has_value();
}

// Throws std::domain_error when the structure does not hold.
IrreducibleDecomposition decompose(const Graph& g, const PartialColoring& c);

}  // namespace dim
