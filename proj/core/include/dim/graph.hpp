#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace dim {

using VertexId = std::int32_t;
using Edge = std::pair<VertexId, VertexId>;

// Simple undirected graph whose vertex ids survive deletions. Ids live in
// [0, capacity()); only ids with has_vertex() true are part of the graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(VertexId n);
  Graph(VertexId n, std::span<const Edge> edges);

  VertexId capacity() const { return static_cast<VertexId>(alive_.size()); }
  bool has_vertex(VertexId v) const { return v >= 0 && v < capacity() && alive_[v]; }
  std::size_t vertex_count() const { return order_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const std::vector<VertexId>& vertices() const { return order_; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(VertexId u, VertexId v) const;

  std::vector<Edge> edges() const;

  // New graph on the surviving vertices; ids are preserved.
  Graph without(std::span<const VertexId> removed) const;
  Graph induced(std::span<const VertexId> keep) const;

  // Relabel onto 0..n-1 preserving vertex order; map[i] is the old id of i.
  Graph compacted(std::vector<VertexId>* map = nullptr) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  friend class GraphEditor;
  void rebuild_rows();

  std::vector<char> alive_;
  std::vector<VertexId> order_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::size_t edge_count_ = 0;
};

// Batch editor used by rewrites. Edits apply to a private copy; finish()
// yields the new immutable graph.
class GraphEditor {
 public:
  explicit GraphEditor(Graph base);

  VertexId add_vertex();
  // Brings back a specific id (used when replaying a trace backwards).
  void restore_vertex(VertexId v);
  void remove_vertex(VertexId v);
  void add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);
  bool adjacent(VertexId u, VertexId v) const;

  Graph finish() &&;

 private:
  Graph g_;
};

std::vector<std::vector<VertexId>> components(const Graph& g);
int max_degree(const Graph& g);

using Triangle = std::array<VertexId, 3>;
std::vector<Triangle> triangles(const Graph& g);

// Maximal cliques with at least two vertices. Throws std::domain_error if g
// contains a K4.
std::vector<std::vector<VertexId>> maximal_cliques_of_size_ge2(const Graph& g);

bool contains_k4(const Graph& g);

// Breadth-first distances from s; -1 for unreachable or absent vertices.
std::vector<int> distances_from(const Graph& g, VertexId s);

}  // namespace dim
