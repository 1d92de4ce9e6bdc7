#include <random>
#include <stdexcept>

#include "dim/long_claw.hpp"
#include "dim/oracle.hpp"

namespace dim {

namespace {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

struct Builder {
  int n = 0;
  std::vector<Edge> edges;

  int add() { return n++; }
  void link(int u, int v) {
    if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::array<int, 3> triangle() {
    int a = add(), b = add(), c = add();
    link(a, b), link(b, c), link(a, c);
    return {a, b, c};
  }
  Graph build() const { return Graph(n, edges); }
};

Graph uniform(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.emplace_back(u, v);
  return Graph(n, es);
}

void pad_with_pendants(Rng& rng, Builder& b, int n) {
  while (b.n < n) {
    int anchor = b.n > 0 ? uniform_int(rng, 0, b.n - 1) : -1;
    int v = b.add();
    if (anchor >= 0) b.link(anchor, v);
  }
}

Graph triangle_chain(Rng& rng, int n) {
  Builder b;
  std::vector<std::array<int, 3>> ts;
  while (b.n + 3 <= n && (ts.empty() || uniform_int(rng, 0, 5) > 0)) {
    auto t = b.triangle();
    if (!ts.empty()) {
      const auto& prev = ts[uniform_int(rng, 0, static_cast<int>(ts.size()) - 1)];
      int i = uniform_int(rng, 0, 2), j = uniform_int(rng, 0, 2);
      b.link(prev[i], t[j]);
      if (uniform_int(rng, 0, 3) == 0) b.link(prev[(i + 1) % 3], t[(j + 1) % 3]);
    }
    ts.push_back(t);
  }
  pad_with_pendants(rng, b, n);
  return b.build();
}

Graph claw_gadget(Rng& rng, int n) {
  Builder b;
  std::vector<std::array<int, 3>> ts;
  for (int k = 0; k < 2 && b.n + 3 <= n; ++k) ts.push_back(b.triangle());
  while (ts.size() >= 2 && b.n + 4 <= n) {
    int x = b.add(), a1 = b.add(), a2 = b.add(), a3 = b.add();
    b.link(x, a1), b.link(x, a2), b.link(x, a3);
    int i = uniform_int(rng, 0, static_cast<int>(ts.size()) - 1);
    int j = uniform_int(rng, 0, static_cast<int>(ts.size()) - 2);
    if (j >= i) ++j;
    b.link(a1, ts[i][uniform_int(rng, 0, 2)]);
    b.link(a3, ts[j][uniform_int(rng, 0, 2)]);
    if (b.n + 3 <= n && uniform_int(rng, 0, 1) == 0) ts.push_back(b.triangle());
    if (uniform_int(rng, 0, 2) == 0) break;
  }
  if (ts.size() >= 2 && uniform_int(rng, 0, 1) == 0)
    b.link(ts[0][uniform_int(rng, 0, 2)], ts[1][uniform_int(rng, 0, 2)]);
  pad_with_pendants(rng, b, n);
  return b.build();
}

Graph path_of_triangles(Rng& rng, int n) {
  Builder b;
  std::vector<std::array<int, 3>> ts{};
  if (n >= 3) ts.push_back(b.triangle());
  while (!ts.empty()) {
    int len = uniform_int(rng, 0, 5);
    if (b.n + len + 3 > n) break;
    int from = ts.back()[uniform_int(rng, 0, 2)];
    for (int k = 0; k < len; ++k) {
      int v = b.add();
      b.link(from, v);
      from = v;
    }
    auto t = b.triangle();
    b.link(from, t[0]);
    ts.push_back(t);
  }
  if (b.n < n && uniform_int(rng, 0, 1) == 0 && !ts.empty()) {
    int from = ts.back()[2];
    while (b.n < n) {
      int v = b.add();
      b.link(from, v);
      from = v;
    }
  }
  pad_with_pendants(rng, b, n);
  return b.build();
}

Graph known(Model m, int n) {
  std::vector<Edge> es;
  switch (m) {
    case Model::Cycle:
      for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
      if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
      break;
    case Model::Path:
      for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
      break;
    case Model::Complete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
      break;
    case Model::Star:
      for (int i = 1; i < n; ++i) es.emplace_back(0, i);
      break;
    default: break;
  }
  return Graph(n, es);
}

}  // namespace

Model parse_model(const std::string& name) {
  if (name == "uniform") return Model::Uniform;
  if (name == "triangle-chain") return Model::TriangleChain;
  if (name == "claw-gadget") return Model::ClawGadget;
  if (name == "path-of-triangles") return Model::PathOfTriangles;
  if (name == "cycle") return Model::Cycle;
  if (name == "path") return Model::Path;
  if (name == "complete") return Model::Complete;
  if (name == "star") return Model::Star;
  throw std::invalid_argument("unknown model '" + name + "'");
}

std::string model_name(Model m) {
  switch (m) {
    case Model::Uniform: return "uniform";
    case Model::TriangleChain: return "triangle-chain";
    case Model::ClawGadget: return "claw-gadget";
    case Model::PathOfTriangles: return "path-of-triangles";
    case Model::Cycle: return "cycle";
    case Model::Path: return "path";
    case Model::Complete: return "complete";
    case Model::Star: return "star";
  }
  return "?";
}

Graph generate(const GeneratorSpec& spec) {
  if (spec.n < 0) throw std::invalid_argument("generate: negative size");
  switch (spec.model) {
    case Model::Cycle:
    case Model::Path:
    case Model::Complete:
    case Model::Star: {
      Graph g = known(spec.model, spec.n);
      if (!is_s222_free(g)) throw std::runtime_error("generate: family member contains S(2,2,2)");
      return g;
    }
    default: break;
  }
  Rng rng(spec.seed);
  for (int attempt = 0; attempt < spec.retry_budget; ++attempt) {
    Graph g;
    switch (spec.model) {
      case Model::Uniform: g = uniform(rng, spec.n, spec.density); break;
      case Model::TriangleChain: g = triangle_chain(rng, spec.n); break;
      case Model::ClawGadget: g = claw_gadget(rng, spec.n); break;
      case Model::PathOfTriangles: g = path_of_triangles(rng, spec.n); break;
      default: break;
    }
    if (is_s222_free(g)) return g;
  }
  throw std::runtime_error("generate: retry budget exhausted for " + model_name(spec.model));
}

}  // namespace dim
