#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dim/coloring.hpp"
#include "dim/forcing.hpp"
#include "dim/graph.hpp"
#include "dim/long_claw.hpp"
#include "dim/oracle.hpp"
#include "dim/pattern.hpp"

namespace dimtest {

using dim::Color;
using dim::Edge;
using dim::Graph;
using dim::PartialColoring;
using dim::Pattern;
using dim::VertexId;
using Rng = std::mt19937_64;

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

inline int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Calls fn on every labelled simple graph on n vertices.
inline void for_each_graph(int n, const std::function<void(const Graph&)>& fn) {
  std::vector<Edge> all;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    std::vector<Edge> es;
    for (std::size_t k = 0; k < all.size(); ++k)
      if (mask >> k & 1) es.push_back(all[k]);
    fn(Graph(n, es));
  }
}

// Bit (i, j) of the upper triangle for n <= 8 vertices.
inline int pair_bit(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (mask >> pair_bit(i, j, n) & 1) es.emplace_back(i, j);
  return Graph(n, es);
}

// Smallest edge mask over all relabellings.
inline std::uint64_t canonical_mask(int n, std::uint64_t mask) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t m = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (mask >> pair_bit(i, j, n) & 1) m |= std::uint64_t{1} << pair_bit(perm[i], perm[j], n);
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// One edge mask per isomorphism class on n <= 7 vertices.
inline std::vector<std::uint64_t> isomorphism_classes(int n) {
  std::vector<std::uint64_t> reps = {0};
  for (int k = 1; k < n; ++k) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t r : reps)
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << k); ++nb) {
        std::uint64_t m = 0;
        for (int i = 0; i < k; ++i)
          for (int j = i + 1; j < k; ++j)
            if (r >> pair_bit(i, j, k) & 1) m |= std::uint64_t{1} << pair_bit(i, j, k + 1);
        for (int i = 0; i < k; ++i)
          if (nb >> i & 1) m |= std::uint64_t{1} << pair_bit(i, k, k + 1);
        next.push_back(canonical_mask(k + 1, m));
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    reps = std::move(next);
  }
  return reps;
}

// Calls fn on a list of n-vertex graphs (n <= 8) containing every
// isomorphism class: each class on n - 1 vertices extended by a new vertex
// with every possible neighbourhood.
inline void for_each_graph_class_cover(int n, const std::function<void(const Graph&)>& fn) {
  if (n <= 1) {
    fn(Graph(n));
    return;
  }
  for (std::uint64_t r : isomorphism_classes(n - 1))
    for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (n - 1)); ++nb) {
      std::vector<Edge> es;
      Graph base = graph_from_mask(n - 1, r);
      for (auto e : base.edges()) es.push_back(e);
      for (int i = 0; i < n - 1; ++i)
        if (nb >> i & 1) es.emplace_back(i, n - 1);
      fn(Graph(n, es));
    }
}

inline Graph random_graph(Rng& rng, int n, double p) {
  std::vector<Edge> es;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng, p)) es.emplace_back(a, b);
  return Graph(n, es);
}

inline Graph random_s222_free(Rng& rng, int n_min, int n_max, double p_min = 0.1, double p_max = 0.5) {
  for (;;) {
    int n = pick(rng, n_min, n_max);
    double p = std::uniform_real_distribution<>(p_min, p_max)(rng);
    Graph g = random_graph(rng, n, p);
    if (dim::is_s222_free(g)) return g;
  }
}

// A graph built around an induced matching B and an independent set W, so
// it always has a dominating induced matching; `noise` adds one random edge
// with that probability.
inline Graph planted_yes(Rng& rng, int n, double noise = 0.25) {
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k) perm[k] = k;
  std::shuffle(perm.begin(), perm.end(), rng);
  int pairs = pick(rng, 0, n / 2);
  std::vector<int> black(n, 0);
  std::vector<Edge> es;
  for (int k = 0; k < pairs; ++k) {
    black[perm[2 * k]] = black[perm[2 * k + 1]] = 1;
    es.push_back(std::minmax(perm[2 * k], perm[2 * k + 1]));
  }
  double p = std::uniform_real_distribution<>(0.15, 0.6)(rng);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (black[a] != black[b] && coin(rng, p)) es.emplace_back(a, b);
  if (n > 1 && coin(rng, noise)) {
    int a = pick(rng, 0, n - 1), b = pick(rng, 0, n - 1);
    if (a != b) es.push_back(std::minmax(a, b));
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return Graph(n, es);
}

inline Graph planted_yes_s222_free(Rng& rng, int n_min, int n_max) {
  for (;;) {
    Graph g = planted_yes(rng, pick(rng, n_min, n_max));
    if (dim::is_s222_free(g)) return g;
  }
}

struct Planted {
  Graph g;
  PartialColoring c;
};

// Host containing the pattern on vertices 0..size-1 (optional pairs decided
// at random), plus up to `extra` further vertices that avoid closed roles and
// respect degree bounds. Colors honour each role's requirement.
inline Planted plant(const Pattern& p, Rng& rng, int extra, double density = 0.3, double color_rate = 0.15,
                     double optional_rate = 0.5) {
  const int k = p.size();
  int n = k + pick(rng, 0, extra);
  std::vector<std::vector<bool>> adj(n + 8, std::vector<bool>(n + 8, false));
  std::vector<int> deg(n + 8, 0);
  auto link = [&](int a, int b) {
    adj[a][b] = adj[b][a] = true;
    ++deg[a];
    ++deg[b];
  };
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      auto kind = p.kind(a, b);
      if (kind == dim::EdgeKind::Required || (kind == dim::EdgeKind::Optional && coin(rng, optional_rate))) link(a, b);
    }
  auto open = [&](int v) { return v >= k || (!p.is_closed(v) && deg[v] < p.degree_bound(v).max); };
  for (int a = 0; a < n; ++a)
    for (int b = std::max(a + 1, k); b < n; ++b)
      if (open(a) && open(b) && coin(rng, density)) link(a, b);
  for (int r = 0; r < k; ++r)
    while (deg[r] < p.degree_bound(r).min && !p.is_closed(r) && n < static_cast<int>(adj.size())) link(r, n++);
  std::vector<Edge> es;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (adj[a][b]) es.emplace_back(a, b);
  Planted out{Graph(n, es), PartialColoring(n)};
  for (int v = 0; v < n; ++v) {
    auto req = v < k ? p.color_req(v) : dim::ColorReq::Any;
    switch (req) {
      case dim::ColorReq::Black: out.c.set(v, Color::Black); break;
      case dim::ColorReq::NotWhite:
        if (coin(rng, color_rate)) out.c.set(v, Color::Black);
        break;
      case dim::ColorReq::Any:
        if (coin(rng, color_rate)) out.c.set(v, coin(rng, 0.5) ? Color::Black : Color::White);
        break;
      case dim::ColorReq::Uncolored: break;
    }
  }
  return out;
}

// Black sets on the host that make a clean pair and honour the role color
// requirements of the first p.size() vertices.
inline std::vector<PartialColoring> clean_colorings(const Graph& g, const Pattern& p, std::size_t limit = 64,
                                                    bool may_assume = true) {
  dim::PropagateOptions opt;
  opt.may_assume = may_assume;
  std::vector<VertexId> optional, forced;
  for (VertexId v : g.vertices()) {
    auto req = v < p.size() ? p.color_req(v) : dim::ColorReq::Any;
    if (req == dim::ColorReq::Black) forced.push_back(v);
    else if (req != dim::ColorReq::Uncolored) optional.push_back(v);
  }
  std::vector<std::vector<int>> dist(g.capacity());
  for (VertexId v : g.vertices()) dist[v] = dim::distances_from(g, v);
  auto far = [&](const std::vector<VertexId>& chosen, VertexId v) {
    for (VertexId u : chosen)
      if (dist[u][v] >= 0 && dist[u][v] < 3) return false;
    return true;
  };
  std::vector<PartialColoring> out;
  std::vector<VertexId> chosen;
  for (VertexId v : forced) {
    if (!far(chosen, v)) return out;
    chosen.push_back(v);
  }
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (out.size() >= limit) return;
    if (i == optional.size()) {
      PartialColoring c(g.capacity());
      for (VertexId v : chosen) c.set(v, Color::Black);
      if (dim::is_clean_pair(g, c, opt)) out.push_back(std::move(c));
      return;
    }
    go(i + 1);
    if (far(chosen, optional[i])) {
      chosen.push_back(optional[i]);
      go(i + 1);
      chosen.pop_back();
    }
  };
  go(0);
  return out;
}

// Roles are the vertices of `host` with its edges required and every other
// pair forbidden. `blacks` get the Black requirement; `closed` vertices
// take no extra neighbours when planted.
inline Pattern host_pattern(const std::string& name, const Graph& host, const std::vector<VertexId>& blacks,
                            const std::vector<VertexId>& closed) {
  Pattern p(name);
  for (VertexId v : host.vertices()) p.role(std::to_string(v + 1));
  for (auto [u, v] : host.edges()) p.edge(std::to_string(u + 1), std::to_string(v + 1));
  for (VertexId v : blacks) p.color(std::to_string(v + 1), dim::ColorReq::Black);
  for (VertexId v : closed) p.closed(std::to_string(v + 1));
  return p;
}

struct CleanHost {
  const char* rule;
  const char* text;  // graph text with a "U:" line naming the black vertices
  bool may_assume = true;  // false: clean only for the forced rules
};

// Hand-built clean pairs on which the named rewrite applies.
inline const std::vector<CleanHost>& clean_hosts() {
  static const std::vector<CleanHost> hosts = {
      {"R5", "9 13\n1 2\n1 3\n2 3\n1 5\n1 7\n2 4\n4 5\n4 7\n4 6\n5 6\n7 8\n7 9\n8 9\nU: 3 6\n"},
      {"R7", "12 16\n1 2\n2 3\n1 3\n2 4\n4 5\n5 6\n4 6\n1 7\n4 7\n7 8\n7 9\n8 9\n1 10\n10 11\n10 12\n11 12\nU: 3\n"},
      {"T6", "9 13\n1 2\n2 3\n1 3\n2 4\n1 5\n4 5\n4 6\n5 6\n1 7\n2 8\n7 8\n8 9\n7 9\nU: 3 6 9\n"},
      {"T3", "11 13\n1 2\n1 3\n1 4\n1 5\n2 6\n3 7\n4 8\n6 7\n6 9\n7 9\n8 10\n8 11\n10 11\nU: 1\n", false},
  };
  return hosts;
}

// The demanded colors are right: in every completion (Forced) or in some
// completion whenever one exists (MayAssume).
inline bool firing_sound(const Graph& g, const PartialColoring& before, const std::vector<dim::Demand>& demands,
                         dim::RuleStrength strength) {
  if (strength == dim::RuleStrength::Forced) {
    for (const auto& d : demands)
      if (!dim::forced_in_all_completions(g, before, d.vertex, d.color)) return false;
    return true;
  }
  if (!dim::completable(g, before)) return true;
  PartialColoring x = before;
  for (const auto& d : demands) {
    if (x[d.vertex] == dim::opposite(d.color)) return false;
    x.set(d.vertex, d.color);
  }
  return dim::completable(g, x);
}

}  // namespace dimtest
