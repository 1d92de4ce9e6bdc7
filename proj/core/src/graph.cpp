#include "dim/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace dim {

namespace {

std::size_t words_for(VertexId n) { return (static_cast<std::size_t>(n) + 63) / 64; }

}  // namespace

Graph::Graph(VertexId n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  alive_.assign(n, 1);
  adj_.resize(n);
  order_.resize(n);
  for (VertexId v = 0; v < n; ++v) order_[v] = v;
  rebuild_rows();
}

Graph::Graph(VertexId n, std::span<const Edge> edges) : Graph(n) {
  GraphEditor ed(std::move(*this));
  for (auto [u, v] : edges) ed.add_edge(u, v);
  *this = std::move(ed).finish();
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  return (rows_[u][v >> 6] >> (v & 63)) & 1U;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u : order_)
    for (VertexId v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::rebuild_rows() {
  const std::size_t w = words_for(capacity());
  rows_.assign(capacity(), std::vector<std::uint64_t>(w, 0));
  edge_count_ = 0;
  order_.clear();
  for (VertexId u = 0; u < capacity(); ++u) {
    if (!alive_[u]) continue;
    order_.push_back(u);
    std::sort(adj_[u].begin(), adj_[u].end());
    for (VertexId v : adj_[u]) {
      rows_[u][v >> 6] |= std::uint64_t{1} << (v & 63);
      if (u < v) ++edge_count_;
    }
  }
}

Graph Graph::without(std::span<const VertexId> removed) const {
  GraphEditor ed(*this);
  for (VertexId v : removed)
    if (has_vertex(v)) ed.remove_vertex(v);
  return std::move(ed).finish();
}

Graph Graph::induced(std::span<const VertexId> keep) const {
  std::vector<char> k(capacity(), 0);
  for (VertexId v : keep)
    if (has_vertex(v)) k[v] = 1;
  std::vector<VertexId> drop;
  for (VertexId v : order_)
    if (!k[v]) drop.push_back(v);
  return without(drop);
}

Graph Graph::compacted(std::vector<VertexId>* map) const {
  std::vector<VertexId> index(capacity(), -1);
  for (std::size_t i = 0; i < order_.size(); ++i) index[order_[i]] = static_cast<VertexId>(i);
  std::vector<Edge> es;
  for (auto [u, v] : edges()) es.emplace_back(index[u], index[v]);
  if (map) *map = order_;
  return Graph(static_cast<VertexId>(order_.size()), es);
}

bool operator==(const Graph& a, const Graph& b) {
  return a.order_ == b.order_ && a.edges() == b.edges();
}

GraphEditor::GraphEditor(Graph base) : g_(std::move(base)) {}

VertexId GraphEditor::add_vertex() {
  g_.alive_.push_back(1);
  g_.adj_.emplace_back();
  return g_.capacity() - 1;
}

void GraphEditor::restore_vertex(VertexId v) {
  if (v < 0) throw std::out_of_range("restore_vertex: negative id");
  if (v >= g_.capacity()) {
    g_.alive_.resize(v + 1, 0);
    g_.adj_.resize(v + 1);
  }
  if (g_.alive_[v]) throw std::invalid_argument("restore_vertex: id in use");
  g_.alive_[v] = 1;
}

void GraphEditor::remove_vertex(VertexId v) {
  if (!g_.has_vertex(v)) throw std::out_of_range("remove_vertex: no vertex " + std::to_string(v));
  for (VertexId u : g_.adj_[v]) std::erase(g_.adj_[u], v);
  g_.adj_[v].clear();
  g_.alive_[v] = 0;
}

bool GraphEditor::adjacent(VertexId u, VertexId v) const {
  if (!g_.has_vertex(u) || !g_.has_vertex(v)) return false;
  const auto& a = g_.adj_[u];
  return std::find(a.begin(), a.end(), v) != a.end();
}

void GraphEditor::add_edge(VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
  if (!g_.has_vertex(u) || !g_.has_vertex(v))
    throw std::out_of_range("add_edge: endpoint missing");
  if (adjacent(u, v)) return;
  g_.adj_[u].push_back(v);
  g_.adj_[v].push_back(u);
}

void GraphEditor::remove_edge(VertexId u, VertexId v) {
  if (!adjacent(u, v)) throw std::invalid_argument("remove_edge: not an edge");
  std::erase(g_.adj_[u], v);
  std::erase(g_.adj_[v], u);
}

Graph GraphEditor::finish() && {
  g_.rebuild_rows();
  return std::move(g_);
}

std::vector<std::vector<VertexId>> components(const Graph& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<char> seen(g.capacity(), 0);
  for (VertexId s : g.vertices()) {
    if (seen[s]) continue;
    std::vector<VertexId> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (VertexId w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (VertexId v : g.vertices()) d = std::max(d, g.degree(v));
  return d;
}

std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (VertexId a : g.vertices())
    for (VertexId b : g.neighbors(a)) {
      if (b <= a) continue;
      for (VertexId c : g.neighbors(b))
        if (c > b && g.adjacent(a, c)) out.push_back({a, b, c});
    }
  return out;
}

bool contains_k4(const Graph& g) {
  for (const auto& t : triangles(g))
    for (VertexId d : g.neighbors(t[2]))
      if (d > t[2] && g.adjacent(d, t[0]) && g.adjacent(d, t[1])) return true;
  return false;
}

std::vector<std::vector<VertexId>> maximal_cliques_of_size_ge2(const Graph& g) {
  if (contains_k4(g)) throw std::domain_error("maximal_cliques_of_size_ge2: graph contains K4");
  std::vector<std::vector<VertexId>> out;
  std::vector<Edge> in_triangle;
  for (const auto& t : triangles(g)) {
    out.push_back({t[0], t[1], t[2]});
    in_triangle.push_back({t[0], t[1]});
    in_triangle.push_back({t[0], t[2]});
    in_triangle.push_back({t[1], t[2]});
  }
  std::sort(in_triangle.begin(), in_triangle.end());
  for (const auto& e : g.edges())
    if (!std::binary_search(in_triangle.begin(), in_triangle.end(), e))
      out.push_back({e.first, e.second});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> distances_from(const Graph& g, VertexId s) {
  std::vector<int> d(g.capacity(), -1);
  if (!g.has_vertex(s)) return d;
  std::deque<VertexId> q{s};
  d[s] = 0;
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop_front();
    for (VertexId w : g.neighbors(u))
      if (d[w] < 0) {
        d[w] = d[u] + 1;
        q.push_back(w);
      }
  }
  return d;
}

}  // namespace dim
