#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dim/graph.hpp"

namespace dim {

// Edges (u < v), sorted.
using Matching = std::vector<Edge>;

bool is_matching(const Graph& g, const Matching& m);
std::vector<VertexId> saturated(const Matching& m);

// Maximum-cardinality matching of a general graph (Edmonds' blossom method).
Matching max_matching(const Graph& g);

// A matching saturating every vertex of `required`, or none. Starts from a
// maximum matching and repairs unsaturated required vertices one at a time
// through an auxiliary vertex joined to the saturated non-required ones.
std::optional<Matching> solve_saturation(const Graph& g, std::span<const VertexId> required);

struct SaturationInstance {
  Graph graph;
  std::vector<VertexId> required;
};

inline std::optional<Matching> solve_saturation(const SaturationInstance& inst) {
  return solve_saturation(inst.graph, inst.required);
}

}  // namespace dim
