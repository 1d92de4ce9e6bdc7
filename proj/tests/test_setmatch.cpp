#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "dim/irreducible.hpp"
#include "dim/matching.hpp"
#include "dim/oracle.hpp"
#include "dim/rewrite.hpp"
#include "dim/setmatch.hpp"
#include "support.hpp"

using namespace dim;
using dimtest::Rng;

namespace {

// Largest matching size, and whether some matching saturates `req`.
struct MatchBrute {
  std::size_t best = 0;
  bool saturates = false;
};

MatchBrute brute_matching(const Graph& g, const std::vector<VertexId>& req) {
  auto es = g.edges();
  std::vector<char> used(g.capacity(), 0);
  MatchBrute out;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t size) {
    if (i == es.size()) {
      out.best = std::max(out.best, size);
      bool all = true;
      for (VertexId v : req) all = all && used[v];
      out.saturates = out.saturates || all;
      return;
    }
    go(i + 1, size);
    auto [u, v] = es[i];
    if (!used[u] && !used[v]) {
      used[u] = used[v] = 1;
      go(i + 1, size + 1);
      used[u] = used[v] = 0;
    }
  };
  go(0, 0);
  return out;
}

bool brute_exact_hit(const SetFamilyInstance& inst) {
  const auto& gr = inst.ground;
  for (std::uint32_t mask = 0; mask < (1U << gr.size()); ++mask) {
    std::vector<VertexId> pick;
    for (std::size_t i = 0; i < gr.size(); ++i)
      if (mask >> i & 1) pick.push_back(gr[i]);
    bool ok = true;
    for (const auto& s : inst.sets) {
      int k = 0;
      for (VertexId x : s) k += std::count(pick.begin(), pick.end(), x) > 0;
      if (k != 1) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

// Random family over 0..universe-1 with every element in at most two sets.
SetFamilyInstance random_family(Rng& rng, int universe) {
  SetFamilyInstance inst;
  std::vector<int> load(universe, 0);
  int k = dimtest::pick(rng, 1, universe);
  for (int s = 0; s < k; ++s) {
    std::vector<VertexId> set;
    int size = dimtest::pick(rng, 1, 4);
    for (int t = 0; t < size * 3 && static_cast<int>(set.size()) < size; ++t) {
      int x = dimtest::pick(rng, 0, universe - 1);
      if (load[x] < 2 && std::find(set.begin(), set.end(), x) == set.end()) set.push_back(x);
    }
    if (set.empty()) continue;
    for (VertexId x : set) ++load[x];
    std::sort(set.begin(), set.end());
    inst.sets.push_back(set);
  }
  for (int x = 0; x < universe; ++x)
    if (dimtest::coin(rng, 0.85)) inst.ground.push_back(x);
  return inst;
}

}  // namespace

TEST_CASE("matching: maximum matching matches brute force") {
  for (int n = 1; n <= 6; ++n)
    dimtest::for_each_graph(n, [&](const Graph& g) {
      auto m = max_matching(g);
      REQUIRE(is_matching(g, m));
      CHECK(m.size() == brute_matching(g, {}).best);
    });
  Rng rng(1);
  for (int it = 0; it < 2000; ++it) {
    Graph g = dimtest::random_graph(rng, dimtest::pick(rng, 7, 12), 0.3);
    auto m = max_matching(g);
    REQUIRE(is_matching(g, m));
    CHECK(m.size() == brute_matching(g, {}).best);
  }
}

TEST_CASE("matching: helpers") {
  std::vector<Edge> p4 = {{0, 1}, {1, 2}, {2, 3}};
  Graph g(4, p4);
  CHECK(is_matching(g, {{0, 1}, {2, 3}}));
  CHECK_FALSE(is_matching(g, {{0, 1}, {1, 2}}));
  CHECK_FALSE(is_matching(g, {{0, 2}}));
  CHECK(saturated({{0, 1}, {2, 3}}) == std::vector<VertexId>{0, 1, 2, 3});
}

TEST_CASE("matching: saturation matches brute force") {
  Rng rng(2);
  int yes = 0, no = 0;
  auto check = [&](const Graph& g, const std::vector<VertexId>& req) {
    auto want = brute_matching(g, req);
    auto got = solve_saturation(g, req);
    CHECK(got.has_value() == want.saturates);
    if (!got) {
      ++no;
      return;
    }
    ++yes;
    REQUIRE(is_matching(g, *got));
    auto sat = saturated(*got);
    for (VertexId v : req) CHECK(std::binary_search(sat.begin(), sat.end(), v));
    CHECK(got->size() == want.best);
  };
  for (int n = 1; n <= 5; ++n)
    dimtest::for_each_graph(n, [&](const Graph& g) {
      for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        std::vector<VertexId> req;
        for (int v = 0; v < n; ++v)
          if (mask >> v & 1) req.push_back(v);
        check(g, req);
      }
    });
  for (int it = 0; it < 3000; ++it) {
    Graph g = dimtest::random_graph(rng, dimtest::pick(rng, 2, 12), std::uniform_real_distribution<>(0.1, 0.5)(rng));
    std::vector<VertexId> req;
    for (VertexId v : g.vertices())
      if (dimtest::coin(rng, 0.5)) req.push_back(v);
    check(g, req);
  }
  CHECK(yes > 1000);
  CHECK(no > 1000);
  SaturationInstance inst{Graph(3, std::vector<Edge>{{0, 1}, {1, 2}}), {0, 2}};
  CHECK_FALSE(solve_saturation(inst).has_value());
}

TEST_CASE("hitting: exact hitting matches brute force") {
  Rng rng(3);
  int yes = 0;
  for (int it = 0; it < 4000; ++it) {
    auto inst = random_family(rng, dimtest::pick(rng, 1, 12));
    bool want = brute_exact_hit(inst);
    CHECK(brute_hitting(inst).has_value() == want);
    auto got = solve_hitting(inst);
    CHECK(got.has_value() == want);
    if (got) {
      ++yes;
      CHECK(hits_exactly_once(inst, *got));
      for (VertexId x : *got) CHECK(std::count(inst.ground.begin(), inst.ground.end(), x) == 1);
    }
  }
  CHECK(yes > 500);
}

TEST_CASE("hitting: edge cases") {
  SetFamilyInstance empty;
  auto e = solve_hitting(empty);
  REQUIRE(e);
  CHECK(e->empty());
  SetFamilyInstance unhittable{{0}, {{1, 2}}};
  CHECK_FALSE(solve_hitting(unhittable).has_value());
  SetFamilyInstance crowded{{0, 1}, {{0}, {0, 1}, {0}}};
  CHECK_THROWS_AS(solve_hitting(crowded), std::invalid_argument);
  SetFamilyInstance shared{{0, 1, 2}, {{0, 1}, {1, 2}}};
  auto s = solve_hitting(shared);
  REQUIRE(s);
  CHECK(hits_exactly_once(shared, *s));
  CHECK_FALSE(hits_exactly_once(shared, {0, 2, 1}));
}

TEST_CASE("irreducible: a lone triangle") {
  std::vector<Edge> tri = {{0, 1}, {1, 2}, {0, 2}};
  Graph k3(3, tri);
  PartialColoring c(3);
  REQUIRE(assert_irreducible_structure(k3, c));
  auto d = decompose(k3, c);
  CHECK(d.core == std::vector<VertexId>{0, 1, 2});
  CHECK(d.claws.empty());
  auto fam = build_family(k3, c, d);
  REQUIRE(fam.sets.size() == 1);
  auto hit = solve_hitting(fam);
  REQUIRE(hit);
  auto col = coloring_from_hit(k3, c, d, *hit);
  CHECK(verify_complete(k3, col));
  CHECK(col.is_white((*hit)[0]));
}

TEST_CASE("irreducible: structure violations") {
  std::vector<Edge> star = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}};
  Graph g(6, star);
  PartialColoring c(6);
  CHECK(irreducible_violation(g, c).has_value());
  CHECK_THROWS_AS(decompose(g, c), std::domain_error);
  std::vector<Edge> p2 = {{0, 1}};
  PartialColoring w(2);
  w.set(0, Color::White);
  CHECK(irreducible_violation(Graph(2, p2), w).has_value());
}

TEST_CASE("irreducible: driver outputs decompose and solve like the oracle") {
  Rng rng(4);
  int families = 0, claws = 0, hubs = 0;
  constexpr Model models[] = {Model::TriangleChain, Model::ClawGadget, Model::PathOfTriangles};
  for (int it = 0; it < 3000; ++it) {
    Graph g = it % 2 ? dimtest::random_s222_free(rng, 3, 12)
                     : generate({models[it / 2 % 3], dimtest::pick(rng, 6, 16), static_cast<std::uint64_t>(it)});
    auto red = reduce_to_irreducible(g, PartialColoring(g.capacity()));
    if (red.refuted || red.graph.vertex_count() == 0) continue;
    if (!assert_irreducible_structure(red.graph, red.coloring)) {
      CHECK_FALSE(completable(red.graph, red.coloring));
      continue;
    }
    auto d = decompose(red.graph, red.coloring);
    claws += static_cast<int>(d.claws.size());
    hubs += static_cast<int>(d.hubs.size());
    auto fam = build_family(red.graph, red.coloring, d);
    ++families;
    for (const auto& s : fam.sets) CHECK((s.size() == 2 || s.size() == 3));
    auto hit = solve_hitting(fam);
    CHECK(hit.has_value() == brute_hitting(fam).has_value());
    CHECK(hit.has_value() == completable(red.graph, red.coloring));
    if (!hit) continue;
    auto col = coloring_from_hit(red.graph, red.coloring, d, *hit);
    CHECK(verify_complete(red.graph, col));
  }
  CHECK(families > 300);
  CHECK(claws > 0);
  CHECK(hubs > 0);
}
