#include "dim/matching.hpp"

#include <algorithm>
#include <deque>

namespace dim {

namespace {

// Blossom search over dense indices. mate[i] == -1 means unmatched.
class Blossom {
 public:
  explicit Blossom(std::vector<std::vector<int>> adj)
      : n_(static_cast<int>(adj.size())), adj_(std::move(adj)), mate_(n_, -1) {}

  std::vector<int>& mate() { return mate_; }

  // Finds an augmenting path from root and flips it. Returns false if none.
  bool augment_from(int root) {
    int end = find_path(root);
    if (end < 0) return false;
    for (int v = end; v != -1;) {
      int pv = parent_[v], ppv = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = ppv;
    }
    return true;
  }

  void maximize() {
    for (int v = 0; v < n_; ++v)
      if (mate_[v] < 0)
        for (int w : adj_[v])
          if (mate_[w] < 0) {
            mate_[v] = w;
            mate_[w] = v;
            break;
          }
    for (int v = 0; v < n_; ++v)
      if (mate_[v] < 0) augment_from(v);
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] < 0) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_path(int root) {
    used_.assign(n_, 0);
    parent_.assign(n_, -1);
    base_.resize(n_);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::deque<int> q{root};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] >= 0 && parent_[mate_[to]] >= 0)) {
          int cur = lca(v, to);
          in_blossom_.assign(n_, 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i)
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                q.push_back(i);
              }
            }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (mate_[to] < 0) return to;
          used_[mate_[to]] = 1;
          q.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

struct Dense {
  std::vector<VertexId> ids;
  std::vector<int> index;
  std::vector<std::vector<int>> adj;
};

Dense densify(const Graph& g) {
  Dense d;
  d.ids = g.vertices();
  d.index.assign(g.capacity(), -1);
  for (std::size_t i = 0; i < d.ids.size(); ++i) d.index[d.ids[i]] = static_cast<int>(i);
  d.adj.resize(d.ids.size());
  for (std::size_t i = 0; i < d.ids.size(); ++i)
    for (VertexId w : g.neighbors(d.ids[i])) d.adj[i].push_back(d.index[w]);
  return d;
}

Matching to_matching(const Dense& d, const std::vector<int>& mate, int limit) {
  Matching m;
  for (int i = 0; i < limit; ++i)
    if (mate[i] > i && mate[i] < limit) m.emplace_back(d.ids[i], d.ids[mate[i]]);
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace

bool is_matching(const Graph& g, const Matching& m) {
  std::vector<char> hit(g.capacity(), 0);
  for (auto [u, v] : m) {
    if (!g.adjacent(u, v) || hit[u] || hit[v]) return false;
    hit[u] = hit[v] = 1;
  }
  return true;
}

std::vector<VertexId> saturated(const Matching& m) {
  std::vector<VertexId> out;
  for (auto [u, v] : m) out.push_back(u), out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

Matching max_matching(const Graph& g) {
  Dense d = densify(g);
  Blossom b(d.adj);
  b.maximize();
  return to_matching(d, b.mate(), static_cast<int>(d.ids.size()));
}

std::optional<Matching> solve_saturation(const Graph& g, std::span<const VertexId> required) {
  Dense d = densify(g);
  const int n = static_cast<int>(d.ids.size());
  std::vector<char> in_u(n, 0);
  for (VertexId v : required) {
    if (!g.has_vertex(v)) return std::nullopt;
    in_u[d.index[v]] = 1;
  }
  Blossom base(d.adj);
  base.maximize();
  std::vector<int> mate = base.mate();
  for (int v = 0; v < n; ++v) {
    if (!in_u[v] || mate[v] >= 0) continue;
    // Auxiliary vertex u0 = n, adjacent to every saturated vertex outside U.
    std::vector<std::vector<int>> adj = d.adj;
    adj.emplace_back();
    for (int w = 0; w < n; ++w)
      if (mate[w] >= 0 && !in_u[w]) {
        adj[n].push_back(w);
        adj[w].push_back(n);
      }
    Blossom aux(std::move(adj));
    aux.mate() = mate;
    aux.mate().push_back(-1);
    if (!aux.augment_from(v)) return std::nullopt;
    mate = aux.mate();
    int dropped = mate[n];
    if (dropped >= 0) mate[dropped] = -1;
    mate.pop_back();
  }
  return to_matching(d, mate, n);
}

}  // namespace dim
