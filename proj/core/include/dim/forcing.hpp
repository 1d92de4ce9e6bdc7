#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dim/coloring.hpp"
#include "dim/graph.hpp"
#include "dim/pattern.hpp"

namespace dim {

// Forced: every completion agrees with the demanded colors.
// MayAssume: some completion does, whenever one exists.
enum class RuleStrength { Forced, MayAssume };

struct Demand {
  VertexId vertex;
  Color color;
};

struct Firing {
  std::vector<Demand> demands;
  std::vector<std::pair<std::string, VertexId>> embedding;
};

struct RuleContext {
  const Graph& g;
  const PartialColoring& c;
  bool s222_free;
};

struct ForcingRule {
  std::string id;
  RuleStrength strength;
  bool needs_s222_free = false;
  std::function<std::optional<Firing>(const RuleContext&)> fire;
  const Pattern* pattern = nullptr;  // set for catalog rules driven by one pattern
};

// Catalog in application order.
const std::vector<ForcingRule>& forcing_rules();
const ForcingRule* find_forcing_rule(const std::string& id);

struct ForcingEvent {
  const ForcingRule& rule;
  const Graph& g;
  const PartialColoring& before;
  const Firing& firing;
};

struct PropagateOptions {
  // Enables the rules whose soundness needs an S(2,2,2)-free host.
  bool s222_free = true;
  // Off: only rules whose colors hold in every completion.
  bool may_assume = true;
  std::function<void(const ForcingEvent&)> on_fire;
};

Verdict propagate(const Graph& g, const PartialColoring& c, const PropagateOptions& opt = {});

// No white vertex, black vertices pairwise at distance three or more, and
// propagate colors nothing new.
bool is_clean_pair(const Graph& g, const PartialColoring& c, const PropagateOptions& opt = {});

}  // namespace dim
