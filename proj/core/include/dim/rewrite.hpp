#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "dim/coloring.hpp"
#include "dim/forcing.hpp"
#include "dim/graph.hpp"
#include "dim/pattern.hpp"

namespace dim {

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class StepKind { Propagate, Clean, Rewrite };

struct TraceEntry {
  StepKind kind = StepKind::Rewrite;
  std::string rule;
  std::vector<std::pair<std::string, VertexId>> embedding;
  std::vector<VertexId> removed;
  std::vector<Demand> removed_colors;  // colored vertices among `removed`
  std::vector<Edge> removed_edges;
  std::vector<VertexId> added;
  std::vector<Edge> added_edges;
  std::vector<Demand> colored;  // propagate steps

  VertexId role(const std::string& name) const;
};

struct RewriteTrace {
  std::vector<TraceEntry> entries;

  std::size_t count(StepKind k) const;
};

// Lift callbacks read the colors of surviving vertices and write the colors
// of the vertices the rule removed.
using LiftFn = std::function<void(const TraceEntry&, PartialColoring&)>;

struct RewriteRule {
  std::string id;
  std::string name;
  bool reduction;
  const Pattern* pattern;
  std::function<bool(const Graph&, const PartialColoring&, const Embedding&)> guard;
  // Edits a copy of the host; returns named added vertices.
  std::function<std::vector<std::pair<std::string, VertexId>>(GraphEditor&, const Embedding&)> apply;
  LiftFn lift;
};

const std::vector<RewriteRule>& rewrite_rules();
const RewriteRule* find_rewrite_rule(const std::string& id);

struct RewriteResult {
  Graph graph;
  PartialColoring coloring;
  TraceEntry entry;
};

std::optional<RewriteResult> apply_rule(const RewriteRule& rule, const Graph& g,
                                        const PartialColoring& c, const Embedding& e);
std::optional<Embedding> find_rule_embedding(const RewriteRule& rule, const Graph& g,
                                             const PartialColoring& c);

// First applicable rule in priority order, canonical first embedding.
std::optional<RewriteResult> try_rewrite(const Graph& g, const PartialColoring& c);

// (bad vertices, |V|, |E|)
using Measure = std::tuple<std::size_t, std::size_t, std::size_t>;
bool is_bad_vertex(const Graph& g, VertexId v);
Measure termination_measure(const Graph& g);

struct RewriteEvent {
  const RewriteRule& rule;
  const Graph& before;
  const PartialColoring& before_coloring;
  const RewriteResult& result;
};

struct ReduceOptions {
  bool s222_free = true;
  std::function<void(const ForcingEvent&)> on_fire;
  std::function<void(const RewriteEvent&)> on_rewrite;
  // Rewrite steps allowed per squared input size.
  std::size_t step_factor = 10;
};

struct ReduceStats {
  std::size_t propagations = 0;
  std::size_t cleanings = 0;
  std::size_t rewrites = 0;
  std::map<std::string, std::size_t> per_rule;
};

struct ReduceResult {
  bool refuted = false;
  Witness witness;
  Graph graph;
  PartialColoring coloring;
  RewriteTrace trace;
  ReduceStats stats;
};

ReduceResult reduce_to_irreducible(const Graph& g, const PartialColoring& c,
                                   const ReduceOptions& opt = {});

// Rebuilds the input graph of the trace from its final graph.
Graph replay_backward(const Graph& final_graph, const RewriteTrace& trace);

// Extends a complete coloring of the final graph to the original graph.
// Throws InternalError when a rule's case analysis does not apply.
PartialColoring lift_completion(const Graph& final_graph, const RewriteTrace& trace,
                                const PartialColoring& final_coloring);

// Clean-pair structure checks the irreducible driver relies on. Returns a
// description of the first violation.
std::optional<std::string> clean_pair_violation(const Graph& g);

}  // namespace dim
