#include "dim/setmatch.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dim/matching.hpp"
#include "dim/rewrite.hpp"

namespace dim {

namespace {

bool contains(const std::vector<VertexId>& sorted, VertexId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::vector<std::vector<VertexId>> restricted_sets(const SetFamilyInstance& inst) {
  std::vector<VertexId> ground = inst.ground;
  std::sort(ground.begin(), ground.end());
  std::map<VertexId, int> members;
  std::vector<std::vector<VertexId>> out;
  for (const auto& s : inst.sets) {
    std::vector<VertexId> r = s;
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    for (VertexId e : r)
      if (++members[e] > 2)
        throw std::invalid_argument("element " + std::to_string(e + 1) + " lies in more than two sets");
    std::erase_if(r, [&](VertexId e) { return !contains(ground, e); });
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

SetFamilyInstance build_family(const Graph& g, const PartialColoring&,
                               const IrreducibleDecomposition& d) {
  SetFamilyInstance inst;
  inst.ground = d.candidates;
  Graph core = g.induced(d.core);
  inst.sets = maximal_cliques_of_size_ge2(core);
  for (const auto& k : d.claws) {
    std::vector<VertexId> t{k.v, k.u, k.a2};
    std::sort(t.begin(), t.end());
    inst.sets.push_back(std::move(t));
  }
  std::map<VertexId, int> members;
  for (const auto& s : inst.sets) {
    if (s.size() < 2 || s.size() > 3) throw InternalError("family set of size " + std::to_string(s.size()));
    for (VertexId e : s)
      if (++members[e] > 2) throw InternalError("vertex " + std::to_string(e + 1) + " in more than two family sets");
  }
  return inst;
}

std::optional<std::vector<VertexId>> solve_hitting(const SetFamilyInstance& inst) {
  auto sets = restricted_sets(inst);
  const int k = static_cast<int>(sets.size());

  std::map<VertexId, std::vector<int>> owners;
  for (int i = 0; i < k; ++i)
    for (VertexId e : sets[i]) owners[e].push_back(i);

  // Keep one shared element per pair of sets, the smallest.
  std::map<std::pair<int, int>, VertexId> shared;
  for (const auto& [e, who] : owners) {
    if (who.size() != 2) continue;
    auto key = std::minmax(who[0], who[1]);
    if (shared.contains(key)) {
      std::erase(sets[who[0]], e);
      std::erase(sets[who[1]], e);
    } else {
      shared.emplace(key, e);
    }
  }
  std::map<VertexId, int> membership;
  for (const auto& s : sets)
    for (VertexId e : s) ++membership[e];

  std::vector<Edge> links;
  for (const auto& [key, e] : shared) links.push_back(key);
  Graph meet(k, links);
  std::vector<VertexId> required;
  for (int i = 0; i < k; ++i)
    if (std::all_of(sets[i].begin(), sets[i].end(), [&](VertexId e) { return membership[e] == 2; }))
      required.push_back(i);

  auto m = solve_saturation(meet, required);
  if (!m) return std::nullopt;

  std::vector<VertexId> chosen;
  std::vector<bool> hit(k, false);
  for (auto [a, b] : *m) {
    chosen.push_back(shared.at(std::minmax(a, b)));
    hit[a] = hit[b] = true;
  }
  for (int i = 0; i < k; ++i) {
    if (hit[i]) continue;
    auto it = std::find_if(sets[i].begin(), sets[i].end(), [&](VertexId e) { return membership[e] == 1; });
    if (it == sets[i].end()) return std::nullopt;
    chosen.push_back(*it);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

bool hits_exactly_once(const SetFamilyInstance& inst, const std::vector<VertexId>& chosen) {
  std::vector<VertexId> sorted = chosen;
  std::sort(sorted.begin(), sorted.end());
  std::vector<VertexId> ground = inst.ground;
  std::sort(ground.begin(), ground.end());
  for (VertexId e : sorted)
    if (!contains(ground, e)) return false;
  for (const auto& s : inst.sets) {
    int n = 0;
    for (VertexId e : s) n += contains(sorted, e);
    if (n != 1) return false;
  }
  return true;
}

std::optional<std::vector<VertexId>> brute_hitting(const SetFamilyInstance& inst) {
  std::vector<VertexId> ground = inst.ground;
  std::sort(ground.begin(), ground.end());
  ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
  if (ground.size() > 24) throw std::invalid_argument("brute_hitting: ground set too large");
  for (std::uint32_t mask = 0; mask < (1u << ground.size()); ++mask) {
    std::vector<VertexId> pick;
    for (std::size_t i = 0; i < ground.size(); ++i)
      if (mask >> i & 1) pick.push_back(ground[i]);
    if (hits_exactly_once(inst, pick)) return pick;
  }
  return std::nullopt;
}

PartialColoring coloring_from_hit(const Graph& g, const PartialColoring& c,
                                  const IrreducibleDecomposition& d,
                                  const std::vector<VertexId>& hit) {
  std::vector<VertexId> h = hit;
  std::sort(h.begin(), h.end());
  PartialColoring out(g.capacity());
  for (VertexId v : g.vertices())
    if (c.is_black(v)) out.set(v, Color::Black);
  for (VertexId v : d.core) out.set(v, contains(h, v) ? Color::White : Color::Black);
  for (const auto& t : d.hubs) {
    if (out.is_white(t.r)) {
      out.set(t.p, Color::Black);
      out.set(t.q, Color::Black);
    } else if (out.is_black(t.q)) {
      out.set(t.p, Color::White);
    } else if (out.is_black(t.p)) {
      out.set(t.q, Color::White);
    } else {
      out.set(std::min(t.p, t.q), Color::White);
      out.set(std::max(t.p, t.q), Color::Black);
    }
  }
  for (const auto& k : d.claws) {
    out.set(k.x, Color::Black);
    if (contains(h, k.a2)) {
      out.set(k.a2, Color::Black);
      out.set(k.a1, Color::White);
      out.set(k.a3, Color::White);
    } else if (contains(h, k.u)) {
      out.set(k.a2, Color::White);
      out.set(k.a1, Color::White);
      out.set(k.a3, Color::Black);
    } else {
      out.set(k.a2, Color::White);
      out.set(k.a3, Color::White);
      out.set(k.a1, Color::Black);
    }
  }
  if (!out.complete_on(g) || !verify_complete(g, out))
    throw InternalError("coloring from hitting set is not feasible");
  return out;
}

}  // namespace dim
