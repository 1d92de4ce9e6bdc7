#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "dim/graph.hpp"
#include "dim/graph_io.hpp"
#include "dim/long_claw.hpp"
#include "dim/pattern.hpp"
#include "support.hpp"

using namespace dim;
using dimtest::Rng;

namespace {

Graph cycle(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return Graph(n, es);
}

// Independent S(2,2,2) test: a 7-vertex induced tree with one degree-3
// centre whose neighbours have degree two.
bool brute_has_s222(const Graph& g) {
  const auto& vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  if (n < 7) return false;
  std::vector<int> pick(7);
  std::function<bool(int, int)> go = [&](int start, int k) {
    if (k == 7) {
      int edges = 0;
      std::array<int, 7> deg{};
      for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
          if (g.adjacent(vs[pick[i]], vs[pick[j]])) ++edges, ++deg[i], ++deg[j];
      if (edges != 6) return false;
      int centre = -1, twos = 0, ones = 0;
      for (int i = 0; i < 7; ++i) {
        if (deg[i] == 3) centre = centre < 0 ? i : 99;
        if (deg[i] == 2) ++twos;
        if (deg[i] == 1) ++ones;
      }
      if (centre < 0 || centre == 99 || twos != 3 || ones != 3) return false;
      for (int i = 0; i < 7; ++i)
        if (i != centre && g.adjacent(vs[pick[i]], vs[pick[centre]]) && deg[i] != 2) return false;
      // Six edges on seven vertices with no isolated vertex and the degree
      // pattern above is connected unless it contains a cycle.
      std::vector<int> seen{0};
      std::vector<char> mark(7, 0);
      mark[0] = 1;
      for (std::size_t h = 0; h < seen.size(); ++h)
        for (int j = 0; j < 7; ++j)
          if (!mark[j] && g.adjacent(vs[pick[seen[h]]], vs[pick[j]])) mark[j] = 1, seen.push_back(j);
      return seen.size() == 7;
    }
    for (int i = start; i < n; ++i) {
      pick[k] = i;
      if (go(i + 1, k + 1)) return true;
    }
    return false;
  };
  return go(0, 0);
}

std::set<std::vector<VertexId>> images(const std::vector<Embedding>& es) {
  std::set<std::vector<VertexId>> out;
  for (const auto& e : es) out.insert(e.images);
  return out;
}

}  // namespace

TEST_CASE("graph: construction keeps ids and merges duplicate edges") {
  std::vector<Edge> es = {{0, 1}, {1, 2}, {1, 0}};
  Graph g(4, es);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(3) == 0);
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
  std::vector<Edge> loop = {{2, 2}};
  CHECK_THROWS_AS(Graph(3, loop), std::invalid_argument);
}

TEST_CASE("graph: without, induced and compacted") {
  Graph c5 = cycle(5);
  std::vector<VertexId> drop = {2};
  Graph p = c5.without(drop);
  CHECK(p.vertex_count() == 4);
  CHECK(p.edge_count() == 3);
  CHECK_FALSE(p.has_vertex(2));
  CHECK(p.has_vertex(4));
  CHECK(p.adjacent(3, 4));

  std::vector<VertexId> keep = {0, 1, 4};
  Graph t = c5.induced(keep);
  CHECK(t.edge_count() == 2);

  std::vector<VertexId> map;
  Graph k = p.compacted(&map);
  CHECK(k.capacity() == 4);
  CHECK(map == std::vector<VertexId>{0, 1, 3, 4});
  CHECK(k.adjacent(2, 3));
  CHECK(k.edge_count() == p.edge_count());
}

TEST_CASE("graph: editor adds, removes and restores") {
  GraphEditor ed(cycle(4));
  VertexId v = ed.add_vertex();
  CHECK(v == 4);
  ed.add_edge(v, 0);
  ed.remove_edge(0, 1);
  ed.remove_vertex(2);
  CHECK_THROWS_AS(ed.remove_edge(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(ed.restore_vertex(0), std::invalid_argument);
  Graph g = std::move(ed).finish();
  CHECK(g.vertex_count() == 4);
  CHECK(g.edges() == std::vector<Edge>{{0, 3}, {0, 4}});

  GraphEditor back(g);
  back.restore_vertex(2);
  back.add_edge(1, 2);
  Graph h = std::move(back).finish();
  CHECK(h.has_vertex(2));
  CHECK(h.adjacent(2, 1));
}

TEST_CASE("graph: components, degrees and distances") {
  std::vector<Edge> es = {{0, 1}, {1, 2}, {3, 4}};
  Graph g(6, es);
  auto comps = components(g);
  CHECK(comps.size() == 3);
  CHECK(max_degree(g) == 2);
  auto d = distances_from(g, 0);
  CHECK(d[2] == 2);
  CHECK(d[3] == -1);
  CHECK(d[0] == 0);
}

TEST_CASE("graph: triangles and maximal cliques match brute force") {
  Rng rng(11);
  for (int it = 0; it < 400; ++it) {
    Graph g = dimtest::random_graph(rng, dimtest::pick(rng, 1, 9), 0.45);
    std::set<Triangle> want;
    const auto& vs = g.vertices();
    for (auto a : vs)
      for (auto b : vs)
        for (auto c : vs)
          if (a < b && b < c && g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) want.insert({a, b, c});
    auto got_v = triangles(g);
    for (auto& t : got_v) std::sort(t.begin(), t.end());
    CHECK(std::set<Triangle>(got_v.begin(), got_v.end()) == want);

    bool k4 = false;
    for (const auto& t : want)
      for (auto d : vs)
        if (d > t[2] && g.adjacent(d, t[0]) && g.adjacent(d, t[1]) && g.adjacent(d, t[2])) k4 = true;
    CHECK(contains_k4(g) == k4);
    if (k4) {
      CHECK_THROWS_AS(maximal_cliques_of_size_ge2(g), std::domain_error);
      continue;
    }
    // Maximal cliques in a K4-free graph: triangles plus edges in no triangle.
    std::set<std::vector<VertexId>> cl;
    for (const auto& t : want) cl.insert({t[0], t[1], t[2]});
    for (auto [u, v] : g.edges()) {
      bool in_tri = false;
      for (auto w : vs)
        if (g.adjacent(u, w) && g.adjacent(v, w)) in_tri = true;
      if (!in_tri) cl.insert({u, v});
    }
    auto got = maximal_cliques_of_size_ge2(g);
    for (auto& c : got) std::sort(c.begin(), c.end());
    CHECK(std::set<std::vector<VertexId>>(got.begin(), got.end()) == cl);
  }
}

TEST_CASE("io: parse, comments and round trip") {
  Graph g = parse_graph("# a path\n3 2\n1 2  # first\n\n2 3\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  std::string text = format_graph(g);
  CHECK(text.rfind("3 2\n", 0) == 0);
  CHECK(parse_graph(text) == g);

  Rng rng(3);
  for (int it = 0; it < 50; ++it) {
    Graph r = dimtest::random_graph(rng, dimtest::pick(rng, 0, 12), 0.3);
    std::ostringstream out;
    save_graph(out, r);
    std::istringstream in(out.str());
    CHECK(load_graph(in) == r);
  }
}

TEST_CASE("io: save compacts surviving vertices") {
  std::vector<VertexId> drop = {0};
  Graph g = cycle(4).without(drop);
  Graph back = parse_graph(format_graph(g));
  CHECK(back.vertex_count() == 3);
  CHECK(back.edge_count() == 2);
}

TEST_CASE("io: malformed input reports the line") {
  auto line_of = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK_THROWS_AS(parse_graph(""), ParseError);
  CHECK(line_of("3 1\n1 1\n") == 2);
  CHECK(line_of("3 1\n1 4\n") == 2);
  CHECK(line_of("3 1\n1 x\n") == 2);
  CHECK(line_of("3 1\n1 2 3\n") == 2);
  CHECK(line_of("3 2\n1 2\n") == 1);
  CHECK(line_of("3 1\n1 2\n2 3\n") == 3);
  CHECK(line_of("-1 0\n") == 1);
  CHECK_THROWS_AS(load_graph_file("/nonexistent/graph.txt"), std::runtime_error);
}

TEST_CASE("io: subset line") {
  std::istringstream in("4 2\n1 2\n3 4\nU: 1 3\n");
  auto gs = load_graph_with_subset(in);
  CHECK(gs.graph.edge_count() == 2);
  CHECK(gs.subset == std::vector<VertexId>{0, 2});
  std::istringstream bad("2 0\nU: 3\n");
  CHECK_THROWS_AS(load_graph_with_subset(bad), ParseError);
  std::istringstream early("U: 1\n2 0\n");
  CHECK_THROWS_AS(load_graph_with_subset(early), ParseError);
}

TEST_CASE("pattern: matcher agrees with exhaustive assignment") {
  Rng rng(7);
  for (int it = 0; it < 300; ++it) {
    int k = dimtest::pick(rng, 2, 4);
    Pattern p("random", dimtest::coin(rng, 0.7));
    for (int r = 0; r < k; ++r) p.role("r" + std::to_string(r));
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) {
        auto ra = "r" + std::to_string(a), rb = "r" + std::to_string(b);
        int pickk = dimtest::pick(rng, 0, 3);
        if (pickk == 0) p.edge(ra, rb);
        if (pickk == 1) p.maybe(ra, rb);
        if (pickk == 2) p.forbid(ra, rb);
      }
    if (dimtest::coin(rng, 0.3)) p.degree("r0", 1, 3);
    if (dimtest::coin(rng, 0.2)) p.closed("r1");
    if (dimtest::coin(rng, 0.3)) p.color("r0", dimtest::coin(rng, 0.5) ? ColorReq::Black : ColorReq::NotWhite);
    Graph g = dimtest::random_graph(rng, dimtest::pick(rng, 2, 7), 0.4);
    std::vector<Color> colors(g.capacity(), Color::Uncolored);
    for (auto& c : colors) c = static_cast<Color>(dimtest::pick(rng, 0, 2));
    std::vector<VertexId> excl;
    if (dimtest::coin(rng, 0.3)) excl.push_back(0);
    MatchOptions opt;
    opt.exclude = excl;
    if (dimtest::coin(rng, 0.5)) opt.colors = colors;

    std::vector<Embedding> fast;
    for_each_embedding(g, p, [&](const Embedding& e) {
      fast.push_back(e);
      return true;
    }, opt);
    auto slow = brute_force_embeddings(g, p, opt);
    CHECK(fast.size() == slow.size());
    CHECK(images(fast) == images(slow));
    auto first = find_induced(g, p, opt);
    CHECK(first.has_value() == !slow.empty());
    if (first) CHECK(first->images == fast.front().images);
  }
}

TEST_CASE("pattern: role lookup") {
  Pattern p("p");
  p.edge("a", "b");
  CHECK(p.size() == 2);
  CHECK(p.index_of("b") == 1);
  CHECK(p.kind(0, 1) == EdgeKind::Required);
  std::vector<Edge> es = {{0, 1}};
  auto e = find_induced(Graph(2, es), p);
  REQUIRE(e);
  CHECK((*e)["a"] != (*e)["b"]);
}

TEST_CASE("s222: long claw detection") {
  std::vector<Edge> claw = {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}};
  Graph s(7, claw);
  auto w = contains_s222(s);
  REQUIRE(w);
  CHECK((*w)["c"] == 0);
  CHECK(is_s222_free(cycle(7)));
  std::vector<Edge> plus = claw;
  plus.emplace_back(2, 4);
  CHECK(is_s222_free(Graph(7, plus)));
}

TEST_CASE("s222: detector agrees with subset search") {
  Rng rng(19);
  int hits = 0;
  for (int it = 0; it < 500; ++it) {
    Graph g = dimtest::random_graph(rng, dimtest::pick(rng, 7, 10), std::uniform_real_distribution<>(0.1, 0.4)(rng));
    bool want = brute_has_s222(g);
    hits += want;
    auto w = contains_s222(g);
    CHECK(w.has_value() == want);
    if (w) {
      std::vector<VertexId> sub(w->images.begin(), w->images.end());
      CHECK(brute_has_s222(g.induced(sub)));
    }
  }
  CHECK(hits > 20);
}
