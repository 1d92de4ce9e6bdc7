#include "dim/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace dim {

namespace {

class Search {
 public:
  Search(const Graph& g, const PartialColoring& extend, bool reversed) {
    if (g.vertex_count() > kBruteForceLimit)
      throw std::length_error("brute_dim: more than " + std::to_string(kBruteForceLimit) + " vertices");
    ids_ = g.vertices();
    n_ = static_cast<int>(ids_.size());
    std::vector<int> index(g.capacity(), -1);
    for (int i = 0; i < n_; ++i) index[ids_[i]] = i;
    nbr_.resize(n_);
    for (int i = 0; i < n_; ++i)
      for (VertexId w : g.neighbors(ids_[i])) nbr_[i].push_back(index[w]);
    pre_.assign(n_, Color::Uncolored);
    for (int i = 0; i < n_; ++i) pre_[i] = extend[ids_[i]];
    build_order(reversed);
    color_.assign(n_, Color::Uncolored);
    blacks_.assign(n_, 0);
    open_.resize(n_);
    for (int i = 0; i < n_; ++i) open_[i] = static_cast<int>(nbr_[i].size());
  }

  std::optional<PartialColoring> run(VertexId capacity) {
    if (!rec(0)) return std::nullopt;
    PartialColoring out(capacity);
    for (int i = 0; i < n_; ++i) out.set(ids_[i], color_[i]);
    return out;
  }

 private:
  void build_order(bool reversed) {
    std::vector<int> base(n_);
    for (int i = 0; i < n_; ++i) base[i] = reversed ? n_ - 1 - i : i;
    std::vector<char> seen(n_, 0);
    for (int i : base)
      if (pre_[i] != Color::Uncolored) {
        seen[i] = 1;
        order_.push_back(i);
      }
    std::size_t head = 0;
    for (int s : base) {
      if (!seen[s]) {
        seen[s] = 1;
        order_.push_back(s);
      }
      for (; head < order_.size(); ++head)
        for (int w : nbr_[order_[head]])
          if (!seen[w]) {
            seen[w] = 1;
            order_.push_back(w);
          }
    }
  }

  bool settled_ok(int v) const { return color_[v] != Color::Black || open_[v] > 0 || blacks_[v] == 1; }

  bool place(int v, Color c) {
    if (c == Color::White) {
      for (int w : nbr_[v])
        if (color_[w] == Color::White) return false;
    } else {
      for (int w : nbr_[v])
        if (color_[w] == Color::Black && blacks_[w] >= 1) return false;
      if (blacks_[v] > 1) return false;
    }
    return true;
  }

  void apply(int v, Color c, int delta) {
    color_[v] = delta > 0 ? c : Color::Uncolored;
    for (int w : nbr_[v]) {
      open_[w] -= delta;
      if (c == Color::Black) blacks_[w] += delta;
    }
  }

  bool rec(int k) {
    if (k == n_) return true;
    const int v = order_[k];
    Color options[2] = {Color::Black, Color::White};
    int count = 2;
    if (pre_[v] != Color::Uncolored) {
      options[0] = pre_[v];
      count = 1;
    }
    for (int i = 0; i < count; ++i) {
      Color c = options[i];
      if (!place(v, c)) continue;
      apply(v, c, +1);
      bool ok = settled_ok(v);
      for (int w : nbr_[v]) ok = ok && settled_ok(w);
      if (ok && rec(k + 1)) return true;
      apply(v, c, -1);
    }
    return false;
  }

  int n_ = 0;
  std::vector<VertexId> ids_;
  std::vector<std::vector<int>> nbr_;
  std::vector<Color> pre_;
  std::vector<int> order_;
  std::vector<Color> color_;
  std::vector<int> blacks_;
  std::vector<int> open_;
};

}  // namespace

std::optional<PartialColoring> brute_dim(const Graph& g, const PartialColoring& extend) {
  return Search(g, extend, false).run(g.capacity());
}

std::optional<PartialColoring> brute_dim_reversed(const Graph& g, const PartialColoring& extend) {
  return Search(g, extend, true).run(g.capacity());
}

bool forced_in_all_completions(const Graph& g, const PartialColoring& c, VertexId v, Color col) {
  if (c[v] == col) return true;
  if (c[v] == opposite(col)) return !completable(g, c);
  PartialColoring other = c;
  other.set(v, opposite(col));
  return !completable(g, other);
}

}  // namespace dim
