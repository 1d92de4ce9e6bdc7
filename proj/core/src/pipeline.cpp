#include "dim/pipeline.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include "dim/irreducible.hpp"
#include "dim/long_claw.hpp"
#include "dim/setmatch.hpp"

namespace dim {

namespace {

std::string describe_embedding(const Embedding& e) {
  std::vector<std::pair<std::string, VertexId>> roles;
  for (int i = 0; i < e.pattern->size(); ++i) roles.emplace_back(e.pattern->role_name(i), e.images[i]);
  return format_embedding(roles);
}

std::string vertex_list(const std::vector<VertexId>& vs) {
  std::string s = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(vs[i] + 1);
  }
  return s + "]";
}

}  // namespace

NotS222Free::NotS222Free(Embedding witness)
    : std::runtime_error("graph contains an induced S222: " + describe_embedding(witness)),
      witness_(std::move(witness)) {}

std::string format_embedding(const std::vector<std::pair<std::string, VertexId>>& roles) {
  std::string s;
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (i) s += ',';
    s += roles[i].first + ":" + std::to_string(roles[i].second + 1);
  }
  return s;
}

void write_trace(std::ostream& out, const RewriteTrace& trace) {
  std::size_t k = 0;
  for (const auto& e : trace.entries) {
    out << "STEP " << ++k << ": rule=" << e.rule << " embedding=" << format_embedding(e.embedding)
        << " removed=" << vertex_list(e.removed)
        << " added=" << vertex_list(e.added);
    if (e.kind == StepKind::Propagate) {
      out << " colored=[";
      for (std::size_t i = 0; i < e.colored.size(); ++i)
        out << (i ? "," : "") << e.colored[i].vertex + 1 << ':' << color_char(e.colored[i].color);
      out << ']';
    }
    out << '\n';
  }
}

SolveReport solve(const Graph& g, const SolveOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  SolveReport rep;
  auto finish = [&]() -> SolveReport {
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return std::move(rep);
  };

  if (opt.check_s222)
    if (auto w = contains_s222(g)) throw NotS222Free(*w);

  ReduceOptions ro;
  ro.on_fire = opt.on_fire;
  ro.on_rewrite = opt.on_rewrite;
  ReduceResult red = reduce_to_irreducible(g, opt.precolor, ro);
  rep.counts.propagations = red.stats.propagations;
  rep.counts.cleanings = red.stats.cleanings;
  rep.counts.rewrites = red.stats.rewrites;
  rep.per_rule = red.stats.per_rule;
  rep.trace = std::move(red.trace);
  if (red.refuted) {
    rep.witness = std::move(red.witness);
    return finish();
  }
  rep.reached_irreducible = true;
  rep.irreducible = red.graph;
  rep.irreducible_coloring = red.coloring;

  if (auto why = irreducible_violation(red.graph, red.coloring)) {
    rep.witness.rule = "irreducible-structure";
    rep.witness.reason = *why;
    return finish();
  }
  IrreducibleDecomposition d = decompose(red.graph, red.coloring);
  SetFamilyInstance family = build_family(red.graph, red.coloring, d);
  rep.counts.family_sets = family.sets.size();
  auto hit = solve_hitting(family);
  if (!hit) {
    rep.witness.rule = "matching-infeasible";
    rep.witness.reason = "no matching saturates the fully shared sets";
    return finish();
  }
  rep.counts.hitting_size = hit->size();
  PartialColoring final_coloring = coloring_from_hit(red.graph, red.coloring, d, *hit);
  PartialColoring full = lift_completion(red.graph, rep.trace, final_coloring).restricted_to(g);
  if (!full.complete_on(g) || !verify_complete(g, full))
    throw InternalError("lifted coloring does not verify");
  for (VertexId v : g.vertices())
    if (!opt.precolor.is_uncolored(v) && opt.precolor[v] != full[v])
      throw InternalError("lifted coloring ignores vertex " + std::to_string(v + 1) + "'s precolor");
  rep.decision = Decision::Yes;
  rep.coloring = std::move(full);
  return finish();
}

}  // namespace dim
