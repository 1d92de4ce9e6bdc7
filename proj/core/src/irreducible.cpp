#include "dim/irreducible.hpp"

#include <algorithm>
#include <stdexcept>

#include "dim/rewrite.hpp"

namespace dim {

namespace {

struct Analysis {
  std::optional<std::string> error;
  IrreducibleDecomposition d;
};

Analysis analyse(const Graph& g, const PartialColoring& c) {
  Analysis a;
  auto fail = [&](std::string why) {
    a.error = std::move(why);
    return a;
  };
  auto& d = a.d;
  if (auto why = clean_pair_violation(g)) return fail(*why);
  if (!c.with_color(g, Color::White).empty()) return fail("white vertex present");
  if (max_degree(g) > 4) return fail("vertex of degree above four");

  auto ts = triangles(g);
  std::vector<int> tri_of(g.capacity(), -1);
  for (int i = 0; i < static_cast<int>(ts.size()); ++i)
    for (VertexId v : ts[i]) tri_of[v] = i;
  for (VertexId v : g.vertices())
    if (tri_of[v] >= 0) d.triangle_vertices.push_back(v);

  for (VertexId v : g.vertices()) {
    if (tri_of[v] >= 0 && c.is_black(v) && g.degree(v) != 2)
      return fail("black triangle vertex " + std::to_string(v + 1) + " without degree two");
    if (g.degree(v) != 4) continue;
    if (tri_of[v] < 0) return fail("degree-four vertex " + std::to_string(v + 1) + " outside triangles");
    const auto& t = ts[tri_of[v]];
    HubTriangle h{v, -1, -1};
    for (VertexId w : t)
      if (w != v) (h.p < 0 ? h.p : h.q) = w;
    if (g.degree(h.p) != 2 || g.degree(h.q) != 2)
      return fail("degree-four vertex " + std::to_string(v + 1) + " in a triangle with a heavy side");
    d.hubs.push_back(h);
    d.hub_sides.push_back(h.p);
    d.hub_sides.push_back(h.q);
  }
  std::sort(d.hub_sides.begin(), d.hub_sides.end());

  std::vector<VertexId> outside;
  for (VertexId v : g.vertices())
    if (tri_of[v] < 0) outside.push_back(v);
  Graph rest = g.induced(outside);
  for (const auto& comp : components(rest)) {
    if (comp.size() != 4) return fail("non-claw component outside triangles");
    VertexId x = -1;
    for (VertexId v : comp)
      if (rest.degree(v) == 3) x = v;
    if (x < 0 || rest.edge_count() < 3) return fail("non-claw component outside triangles");
    for (VertexId v : comp)
      if (v != x && rest.degree(v) != 1) return fail("non-claw component outside triangles");
    if (g.degree(x) != 3) return fail("claw centre with outside neighbours");
    ClawComponent k{x, -1, -1, -1, -1, -1};
    for (VertexId v : comp) {
      if (v == x) continue;
      if (g.degree(v) == 1) {
        if (k.a2 >= 0) return fail("claw with two leaves");
        k.a2 = v;
      } else if (g.degree(v) == 2) {
        VertexId other = g.neighbors(v)[0] == x ? g.neighbors(v)[1] : g.neighbors(v)[0];
        if (k.a1 < 0) {
          k.a1 = v;
          k.v = other;
        } else {
          k.a3 = v;
          k.u = other;
        }
      } else {
        return fail("claw leg of degree above two");
      }
    }
    if (k.a2 < 0 || k.a1 < 0 || k.a3 < 0) return fail("claw without the leaf shape");
    if (tri_of[k.v] < 0 || tri_of[k.u] < 0 || tri_of[k.v] == tri_of[k.u])
      return fail("claw legs not attached to two different triangles");
    d.claws.push_back(k);
  }

  for (VertexId v : d.triangle_vertices)
    if (!std::binary_search(d.hub_sides.begin(), d.hub_sides.end(), v) && !c.is_black(v))
      d.core.push_back(v);
  d.candidates = d.core;
  for (const auto& k : d.claws) d.candidates.push_back(k.a2);
  std::sort(d.candidates.begin(), d.candidates.end());
  return a;
}

}  // namespace

std::optional<std::string> irreducible_violation(const Graph& g, const PartialColoring& c) {
  return analyse(g, c).error;
}

IrreducibleDecomposition decompose(const Graph& g, const PartialColoring& c) {
  Analysis a = analyse(g, c);
  if (a.error) throw std::domain_error("decompose: " + *a.error);
  return std::move(a.d);
}

}  // namespace dim
