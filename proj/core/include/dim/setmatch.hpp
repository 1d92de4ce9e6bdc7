#pragma once

#include <optional>
#include <vector>

#include "dim/coloring.hpp"
#include "dim/graph.hpp"
#include "dim/irreducible.hpp"

namespace dim {

// Sets over vertex ids in which every element lies in at most two sets.
// Only elements of `ground` may be picked; other members only count for
// the membership bound.
struct SetFamilyInstance {
  std::vector<VertexId> ground;
  std::vector<std::vector<VertexId>> sets;
};

// Maximal cliques of the core subgraph plus one {v, u, a2} triple per claw.
// Throws InternalError if a set has a size other than two or three or an
// element lies in more than two sets.
SetFamilyInstance build_family(const Graph& g, const PartialColoring& c,
                               const IrreducibleDecomposition& d);

// A subset of the ground set meeting every set exactly once, or none.
// Throws std::invalid_argument when the membership bound fails.
std::optional<std::vector<VertexId>> solve_hitting(const SetFamilyInstance& inst);

// Reference exhaustive search, for small ground sets.
std::optional<std::vector<VertexId>> brute_hitting(const SetFamilyInstance& inst);

bool hits_exactly_once(const SetFamilyInstance& inst, const std::vector<VertexId>& chosen);

// Complete coloring of g built from a hitting set; throws InternalError if
// the result is not feasible.
PartialColoring coloring_from_hit(const Graph& g, const PartialColoring& c,
                                  const IrreducibleDecomposition& d,
                                  const std::vector<VertexId>& hit);

}  // namespace dim
