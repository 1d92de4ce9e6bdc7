#include <sstream>

#include "doctest.h"
#include "dim/graph_io.hpp"
#include "dim/oracle.hpp"
#include "dim/pipeline.hpp"
#include "support.hpp"

using namespace dim;
using dimtest::Rng;

namespace {

bool yes(const Graph& g) { return solve(g).decision == Decision::Yes; }

Graph named(Model m, int n) { return generate({m, n, 1}); }

}  // namespace

TEST_CASE("solve: known values") {
  CHECK(yes(named(Model::Complete, 3)));
  CHECK_FALSE(yes(named(Model::Complete, 4)));
  CHECK_FALSE(yes(named(Model::Cycle, 4)));
  CHECK_FALSE(yes(named(Model::Cycle, 5)));
  CHECK(yes(named(Model::Cycle, 6)));
  CHECK(yes(named(Model::Star, 4)));
  CHECK(yes(named(Model::Path, 2)));
  CHECK(yes(named(Model::Path, 7)));
  CHECK(yes(Graph(0)));
  CHECK(yes(Graph(1)));
}

TEST_CASE("solve: certificate and witness") {
  Graph c6 = named(Model::Cycle, 6);
  auto r = solve(c6);
  REQUIRE(r.decision == Decision::Yes);
  CHECK(verify_complete(c6, r.coloring));
  Graph c5 = named(Model::Cycle, 5);
  auto n = solve(c5);
  CHECK(n.decision == Decision::No);
  CHECK_FALSE(n.witness.rule.empty());
  CHECK(n.seconds >= 0);
}

TEST_CASE("solve: long claw is rejected unless unchecked") {
  std::vector<Edge> claw = {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}};
  Graph s(7, claw);
  CHECK_THROWS_AS(solve(s), NotS222Free);
  try {
    solve(s);
  } catch (const NotS222Free& e) {
    CHECK(e.witness()["c"] == 0);
  }
  SolveOptions opt;
  opt.check_s222 = false;
  auto r = solve(s, opt);
  if (r.decision == Decision::Yes) CHECK(verify_complete(s, r.coloring));
}

TEST_CASE("solve: precolored input") {
  std::vector<Edge> p2 = {{0, 1}, {1, 2}};
  Graph p3(3, p2);
  SolveOptions opt;
  opt.precolor = PartialColoring(3);
  opt.precolor.set(1, Color::White);
  CHECK(solve(p3, opt).decision == Decision::No);
  opt.precolor = PartialColoring(3);
  opt.precolor.set(0, Color::White);
  auto r = solve(p3, opt);
  REQUIRE(r.decision == Decision::Yes);
  CHECK(r.coloring.is_white(0));
}

TEST_CASE("solve: agrees with the oracle on random inputs") {
  Rng rng(31);
  constexpr Model models[] = {Model::Uniform, Model::TriangleChain, Model::ClawGadget, Model::PathOfTriangles};
  for (int it = 0; it < 1500; ++it) {
    Graph g;
    switch (it % 3) {
      case 0: g = dimtest::random_s222_free(rng, 1, 12); break;
      case 1: g = dimtest::planted_yes_s222_free(rng, 1, 12); break;
      default: g = generate({models[it % 4], dimtest::pick(rng, 7, 14), static_cast<std::uint64_t>(it), 0.25}); break;
    }
    auto r = solve(g);
    bool want = brute_dim(g).has_value();
    CHECK((r.decision == Decision::Yes) == want);
    if (r.decision == Decision::Yes) CHECK(verify_complete(g, r.coloring));
  }
}

TEST_CASE("solve: precolorings agree with the oracle") {
  Rng rng(32);
  for (int it = 0; it < 800; ++it) {
    Graph g = dimtest::planted_yes_s222_free(rng, 2, 11);
    SolveOptions opt;
    opt.precolor = PartialColoring(g.capacity());
    for (VertexId v : g.vertices())
      if (dimtest::coin(rng, 0.15)) opt.precolor.set(v, dimtest::coin(rng, 0.5) ? Color::Black : Color::White);
    if (!is_feasible_partial(g, opt.precolor)) continue;
    auto r = solve(g, opt);
    CHECK((r.decision == Decision::Yes) == completable(g, opt.precolor));
    if (r.decision == Decision::Yes)
      for (VertexId v : g.vertices())
        if (!opt.precolor.is_uncolored(v)) CHECK(r.coloring[v] == opt.precolor[v]);
  }
}

TEST_CASE("solve: trace text") {
  Graph g = parse_graph("7 7\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n1 7\n");
  auto r = solve(g);
  std::ostringstream out;
  write_trace(out, r.trace);
  std::string text = out.str();
  CHECK(r.trace.entries.size() > 0);
  CHECK(text.rfind("STEP 1: rule=", 0) == 0);
  std::size_t lines = std::count(text.begin(), text.end(), '\n');
  CHECK(lines == r.trace.entries.size());
  CHECK(format_embedding({{"a", 0}, {"b", 4}}) == "a:1,b:5");
}
