#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dim/coloring.hpp"
#include "dim/graph.hpp"

namespace dim {

inline constexpr std::size_t kBruteForceLimit = 26;

// Some feasible complete coloring of g extending `extend`, or none.
// Throws std::length_error above kBruteForceLimit vertices.
std::optional<PartialColoring> brute_dim(const Graph& g, const PartialColoring& extend = {});

// Same search with vertices visited in reverse order.
std::optional<PartialColoring> brute_dim_reversed(const Graph& g, const PartialColoring& extend = {});

inline bool completable(const Graph& g, const PartialColoring& c) { return brute_dim(g, c).has_value(); }

// True iff every completion of c gives v the color `col` (vacuously true
// when c has no completion).
bool forced_in_all_completions(const Graph& g, const PartialColoring& c, VertexId v, Color col);

enum class Model { Uniform, TriangleChain, ClawGadget, PathOfTriangles, Cycle, Path, Complete, Star };

struct GeneratorSpec {
  Model model = Model::Uniform;
  int n = 10;
  std::uint64_t seed = 1;
  double density = 0.25;  // Uniform only
  int retry_budget = 2000;
};

Model parse_model(const std::string& name);
std::string model_name(Model m);

// Deterministic for a fixed spec; throws std::runtime_error when the
// rejection budget runs out.
Graph generate(const GeneratorSpec& spec);

}  // namespace dim
