#include "dim/rewrite.hpp"

#include <algorithm>
#include <set>

namespace dim {

VertexId TraceEntry::role(const std::string& name) const {
  for (const auto& [r, v] : embedding)
    if (r == name) return v;
  throw InternalError(rule + ": trace entry has no role " + name);
}

std::size_t RewriteTrace::count(StepKind k) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [k](const TraceEntry& e) { return e.kind == k; }));
}

namespace {

template <class T>
std::vector<T> minus(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Graph undo(const Graph& post, const TraceEntry& e) {
  GraphEditor ed(post);
  for (auto [u, v] : e.added_edges)
    if (ed.adjacent(u, v)) ed.remove_edge(u, v);
  for (VertexId v : e.added)
    if (post.has_vertex(v)) ed.remove_vertex(v);
  for (VertexId v : e.removed) ed.restore_vertex(v);
  for (auto [u, v] : e.removed_edges) ed.add_edge(u, v);
  return std::move(ed).finish();
}

TraceEntry diff_entry(StepKind kind, std::string rule, const Graph& before, const PartialColoring& c,
                      const Graph& after) {
  TraceEntry e;
  e.kind = kind;
  e.rule = std::move(rule);
  e.removed = minus(before.vertices(), after.vertices());
  e.added = minus(after.vertices(), before.vertices());
  e.removed_edges = minus(before.edges(), after.edges());
  e.added_edges = minus(after.edges(), before.edges());
  for (VertexId v : e.removed)
    if (!c.is_uncolored(v)) e.removed_colors.push_back({v, c[v]});
  return e;
}

bool triangles_share_vertex(const Graph& g) {
  auto ts = triangles(g);
  std::vector<int> seen(g.capacity(), 0);
  for (const auto& t : ts)
    for (VertexId v : t)
      if (seen[v]++) return true;
  return false;
}

std::optional<std::vector<VertexId>> c5_component(const Graph& g) {
  for (const auto& comp : components(g)) {
    if (comp.size() != 5) continue;
    bool cycle = std::all_of(comp.begin(), comp.end(), [&](VertexId v) { return g.degree(v) == 2; });
    if (cycle) return comp;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> clean_pair_violation(const Graph& g) {
  if (contains_k4(g)) return "K4 present";
  if (triangles_share_vertex(g)) return "vertex in two triangles";
  auto ts = triangles(g);
  std::vector<int> tri_of(g.capacity(), -1);
  for (int i = 0; i < static_cast<int>(ts.size()); ++i)
    for (VertexId v : ts[i]) tri_of[v] = i;
  std::map<std::pair<int, int>, std::vector<Edge>> links;
  for (auto [u, v] : g.edges()) {
    int a = tri_of[u], b = tri_of[v];
    if (a < 0 || b < 0 || a == b) continue;
    links[{std::min(a, b), std::max(a, b)}].emplace_back(u, v);
  }
  for (const auto& [key, es] : links) {
    if (es.size() > 2) return "three edges between two triangles";
    if (es.size() == 2) {
      auto [a, b] = es[0];
      auto [c, d] = es[1];
      if (a == c || a == d || b == c || b == d) return "adjacent edges between two triangles";
    }
  }
  return std::nullopt;
}

std::optional<Embedding> find_rule_embedding(const RewriteRule& rule, const Graph& g,
                                             const PartialColoring& c) {
  std::optional<Embedding> out;
  MatchOptions opt;
  opt.colors = c.raw();
  for_each_embedding(
      g, *rule.pattern,
      [&](const Embedding& e) {
        if (!rule.guard(g, c, e)) return true;
        out = e;
        return false;
      },
      opt);
  return out;
}

std::optional<RewriteResult> apply_rule(const RewriteRule& rule, const Graph& g,
                                        const PartialColoring& c, const Embedding& e) {
  GraphEditor ed(g);
  auto added = rule.apply(ed, e);
  Graph h = std::move(ed).finish();
  TraceEntry entry = diff_entry(StepKind::Rewrite, rule.id, g, c, h);
  for (int i = 0; i < e.pattern->size(); ++i) entry.embedding.emplace_back(e.pattern->role_name(i), e.images[i]);
  for (auto& a : added) entry.embedding.push_back(a);
  PartialColoring hc = c.restricted_to(h);
  return RewriteResult{std::move(h), std::move(hc), std::move(entry)};
}

std::optional<RewriteResult> try_rewrite(const Graph& g, const PartialColoring& c) {
  for (const auto& rule : rewrite_rules())
    if (auto e = find_rule_embedding(rule, g, c)) return apply_rule(rule, g, c, *e);
  return std::nullopt;
}

bool is_bad_vertex(const Graph& g, VertexId v) {
  const int d = g.degree(v);
  if (d > 4) return true;
  if (d < 4) return false;
  const auto& nv = g.neighbors(v);
  for (std::size_t i = 0; i < nv.size(); ++i)
    for (std::size_t j = i + 1; j < nv.size(); ++j)
      if (g.adjacent(nv[i], nv[j]) && g.degree(nv[i]) == 2 && g.degree(nv[j]) == 2) return false;
  return true;
}

Measure termination_measure(const Graph& g) {
  std::size_t bad = 0;
  for (VertexId v : g.vertices()) bad += is_bad_vertex(g, v);
  return {bad, g.vertex_count(), g.edge_count()};
}

ReduceResult reduce_to_irreducible(const Graph& g0, const PartialColoring& c0, const ReduceOptions& opt) {
  ReduceResult out;
  Graph g = g0;
  PartialColoring c = c0.restricted_to(g0);
  const std::size_t n0 = std::max<std::size_t>(g0.vertex_count(), 1);
  const std::size_t step_limit = opt.step_factor * n0 * n0;
  PropagateOptions popt;
  popt.s222_free = opt.s222_free;
  popt.on_fire = opt.on_fire;
  auto refute = [&](Witness w) {
    out.refuted = true;
    out.witness = std::move(w);
    out.graph = g;
    out.coloring = c;
    return out;
  };
  for (;;) {
    Verdict v = propagate(g, c, popt);
    ++out.stats.propagations;
    if (auto* r = std::get_if<Refuted>(&v)) return refute(r->witness);
    const PartialColoring& pc = coloring_of(v);
    if (!(pc == c)) {
      TraceEntry e;
      e.kind = StepKind::Propagate;
      e.rule = "propagate";
      for (VertexId u : g.vertices())
        if (c.is_uncolored(u) && !pc.is_uncolored(u)) e.colored.push_back({u, pc[u]});
      out.trace.entries.push_back(std::move(e));
      c = pc;
    }
    CleanResult cr = clean(g, c);
    if (cr.graph.vertex_count() != g.vertex_count()) {
      ++out.stats.cleanings;
      TraceEntry e = diff_entry(StepKind::Clean, "clean", g, c, cr.graph);
      out.trace.entries.push_back(std::move(e));
      g = std::move(cr.graph);
      c = std::move(cr.coloring);
      continue;
    }
    if (auto comp = c5_component(g)) {
      Witness w{"c5-component", {}, (*comp)[0], "component isomorphic to C5"};
      for (VertexId u : *comp) w.embedding.emplace_back("c", u);
      return refute(std::move(w));
    }
    if (auto why = clean_pair_violation(g)) return refute(Witness{"clean-structure", {}, -1, *why});
    auto rw = try_rewrite(g, c);
    if (!rw) break;
    Measure before = termination_measure(g), after = termination_measure(rw->graph);
    if (!(after < before))
      throw InternalError(rw->entry.rule + " did not decrease the termination measure");
    if (++out.stats.rewrites > step_limit) throw InternalError("rewrite step bound exceeded");
    ++out.stats.per_rule[rw->entry.rule];
    if (opt.on_rewrite) opt.on_rewrite(RewriteEvent{*find_rewrite_rule(rw->entry.rule), g, c, *rw});
    out.trace.entries.push_back(rw->entry);
    g = std::move(rw->graph);
    c = std::move(rw->coloring);
  }
  out.graph = g;
  out.coloring = c;
  return out;
}

Graph replay_backward(const Graph& final_graph, const RewriteTrace& trace) {
  Graph g = final_graph;
  for (auto it = trace.entries.rbegin(); it != trace.entries.rend(); ++it)
    if (it->kind != StepKind::Propagate) g = undo(g, *it);
  return g;
}

PartialColoring lift_completion(const Graph& final_graph, const RewriteTrace& trace,
                                const PartialColoring& final_coloring) {
  Graph g = final_graph;
  PartialColoring c = final_coloring;
  if (!verify_complete(g, c)) throw InternalError("lift_completion: final coloring is not a completion");
  for (auto it = trace.entries.rbegin(); it != trace.entries.rend(); ++it) {
    const TraceEntry& e = *it;
    if (e.kind == StepKind::Propagate) {
      for (const auto& d : e.colored)
        if (g.has_vertex(d.vertex) && c[d.vertex] != d.color)
          throw InternalError("lift_completion: completion disagrees with forced color");
      continue;
    }
    if (e.kind == StepKind::Clean) {
      for (const auto& d : e.removed_colors) c.set(d.vertex, d.color);
    } else {
      const RewriteRule* rule = find_rewrite_rule(e.rule);
      if (!rule) throw InternalError("lift_completion: unknown rule " + e.rule);
      rule->lift(e, c);
      for (const auto& d : e.removed_colors)
        if (c[d.vertex] != d.color)
          throw InternalError(e.rule + ": lift contradicts precolored vertex " + std::to_string(d.vertex + 1));
    }
    g = undo(g, e);
    for (VertexId v : e.removed)
      if (c.is_uncolored(v)) throw InternalError(e.rule + ": lift left a vertex uncolored");
    if (!verify_complete(g, c)) throw InternalError(e.rule + ": lifted coloring is infeasible");
  }
  return c.restricted_to(g);
}

}  // namespace dim
