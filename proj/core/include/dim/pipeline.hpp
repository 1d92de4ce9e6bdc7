#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "dim/coloring.hpp"
#include "dim/graph.hpp"
#include "dim/pattern.hpp"
#include "dim/rewrite.hpp"

namespace dim {

class NotS222Free : public std::runtime_error {
 public:
  explicit NotS222Free(Embedding witness);
  const Embedding& witness() const { return witness_; }

 private:
  Embedding witness_;
};

struct SolveOptions {
  bool check_s222 = true;
  PartialColoring precolor;
  std::function<void(const ForcingEvent&)> on_fire;
  std::function<void(const RewriteEvent&)> on_rewrite;
};

enum class Decision { Yes, No };

struct PhaseCounts {
  std::size_t propagations = 0;
  std::size_t cleanings = 0;
  std::size_t rewrites = 0;
  std::size_t family_sets = 0;
  std::size_t hitting_size = 0;
};

struct SolveReport {
  Decision decision = Decision::No;
  PartialColoring coloring;  // complete on the input when Yes
  Witness witness;           // set when No
  PhaseCounts counts;
  std::map<std::string, std::size_t> per_rule;
  RewriteTrace trace;
  bool reached_irreducible = false;  // reduction ended without a refutation
  Graph irreducible;
  PartialColoring irreducible_coloring;
  double seconds = 0;
};

// Throws NotS222Free, or InternalError when a stage breaks its contract.
SolveReport solve(const Graph& g, const SolveOptions& opt = {});

// One `STEP k: ...` line per trace entry, 1-based vertex labels.
void write_trace(std::ostream& out, const RewriteTrace& trace);

std::string format_embedding(const std::vector<std::pair<std::string, VertexId>>& roles);

}  // namespace dim
