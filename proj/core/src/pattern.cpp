#include "dim/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace dim {

Pattern::Pattern(std::string name, bool induced) : name_(std::move(name)), induced_(induced) {}

int Pattern::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (roles_[i] == name) return i;
  return -1;
}

int Pattern::role(std::string_view name) {
  if (int i = index_of(name); i >= 0) return i;
  order_.clear();
  roles_.emplace_back(name);
  const EdgeKind dflt = induced_ ? EdgeKind::Forbidden : EdgeKind::Optional;
  for (auto& row : kind_) row.push_back(dflt);
  for (auto& row : explicit_) row.push_back(false);
  kind_.emplace_back(roles_.size(), dflt);
  explicit_.emplace_back(roles_.size(), false);
  degree_.emplace_back();
  closed_.push_back(false);
  color_.push_back(ColorReq::Any);
  return size() - 1;
}

void Pattern::set_kind(int a, int b, EdgeKind k) {
  if (a == b) throw std::invalid_argument(name_ + ": self pair");
  if (explicit_[a][b] && kind_[a][b] != k)
    throw std::invalid_argument(name_ + ": conflicting constraints on " + roles_[a] + "-" + roles_[b]);
  kind_[a][b] = kind_[b][a] = k;
  explicit_[a][b] = explicit_[b][a] = true;
  order_.clear();
}

Pattern& Pattern::edge(std::string_view a, std::string_view b) {
  const int i = role(a);
  set_kind(i, role(b), EdgeKind::Required);
  return *this;
}

Pattern& Pattern::maybe(std::string_view a, std::string_view b) {
  const int i = role(a);
  set_kind(i, role(b), EdgeKind::Optional);
  return *this;
}

Pattern& Pattern::forbid(std::string_view a, std::string_view b) {
  const int i = role(a);
  set_kind(i, role(b), EdgeKind::Forbidden);
  return *this;
}

Pattern& Pattern::degree(std::string_view r, int exact) { return degree(r, exact, exact); }

Pattern& Pattern::degree(std::string_view r, int lo, int hi) {
  degree_[role(r)] = {lo, hi};
  order_.clear();
  return *this;
}

Pattern& Pattern::closed(std::string_view r) {
  closed_[role(r)] = true;
  order_.clear();
  return *this;
}

Pattern& Pattern::color(std::string_view r, ColorReq req) {
  color_[role(r)] = req;
  return *this;
}

EdgeKind Pattern::kind(int a, int b) const { return kind_[a][b]; }

const std::vector<int>& Pattern::order() const {
  if (!order_.empty() || roles_.empty()) return order_;
  const int n = size();
  auto static_score = [&](int r) {
    int s = 0;
    for (int q = 0; q < n; ++q)
      if (q != r && kind_[r][q] == EdgeKind::Required) s += 2;
    if (degree_[r].max != INT_MAX) s += 3;
    if (closed_[r]) s += 3;
    if (color_[r] == ColorReq::Black) s += 4;
    return s;
  };
  std::vector<bool> placed(n, false);
  for (int step = 0; step < n; ++step) {
    int best = -1, best_links = -1, best_score = -1;
    for (int r = 0; r < n; ++r) {
      if (placed[r]) continue;
      int links = 0;
      for (int q = 0; q < n; ++q)
        if (placed[q] && kind_[r][q] == EdgeKind::Required) ++links;
      int sc = static_score(r);
      if (links > best_links || (links == best_links && sc > best_score)) {
        best = r;
        best_links = links;
        best_score = sc;
      }
    }
    placed[best] = true;
    order_.push_back(best);
  }
  return order_;
}

VertexId Embedding::operator[](std::string_view role) const {
  int i = pattern->index_of(role);
  if (i < 0) throw std::out_of_range("no role " + std::string(role) + " in " + pattern->name());
  return images[i];
}

namespace {

class Matcher {
 public:
  Matcher(const Graph& g, const Pattern& p, const MatchOptions& opt,
          const std::function<bool(const Embedding&)>& fn)
      : g_(g), p_(p), opt_(opt), fn_(fn), order_(p.order()) {
    used_.assign(g.capacity(), 0);
    for (VertexId v : opt.exclude)
      if (g.has_vertex(v)) used_[v] = 1;
    emb_.pattern = &p;
    emb_.images.assign(p.size(), -1);
    anchor_.assign(p.size(), -1);
    for (int i = 1; i < p.size(); ++i)
      for (int j = 0; j < i; ++j)
        if (p.kind(order_[i], order_[j]) == EdgeKind::Required) {
          anchor_[i] = order_[j];
          break;
        }
    max_nbrs_.assign(p.size(), 0);
    for (int r = 0; r < p.size(); ++r)
      for (int q = 0; q < p.size(); ++q)
        if (q != r && p.kind(r, q) != EdgeKind::Forbidden) ++max_nbrs_[r];
  }

  void run() {
    if (p_.size() == 0) {
      fn_(emb_);
      return;
    }
    search(0);
  }

 private:
  Color color_of(VertexId v) const {
    return opt_.colors.empty() || static_cast<std::size_t>(v) >= opt_.colors.size()
               ? Color::Uncolored
               : opt_.colors[v];
  }

  bool fits(int r, VertexId v, int depth) const {
    if (used_[v]) return false;
    const int d = g_.degree(v);
    const auto& db = p_.degree_bound(r);
    if (d < db.min || d > db.max) return false;
    if (p_.is_closed(r) && d > max_nbrs_[r]) return false;
    switch (p_.color_req(r)) {
      case ColorReq::Any: break;
      case ColorReq::Black:
        if (color_of(v) != Color::Black) return false;
        break;
      case ColorReq::Uncolored:
        if (color_of(v) != Color::Uncolored) return false;
        break;
      case ColorReq::NotWhite:
        if (color_of(v) == Color::White) return false;
        break;
    }
    for (int i = 0; i < depth; ++i) {
      int q = order_[i];
      bool adj = g_.adjacent(emb_.images[q], v);
      EdgeKind k = p_.kind(r, q);
      if (k == EdgeKind::Required && !adj) return false;
      if (k == EdgeKind::Forbidden && adj) return false;
    }
    return true;
  }

  bool closure_ok() const {
    for (int r = 0; r < p_.size(); ++r) {
      if (!p_.is_closed(r)) continue;
      for (VertexId w : g_.neighbors(emb_.images[r]))
        if (!in_image_[w]) return false;
    }
    return true;
  }

  bool search(int depth) {
    if (depth == p_.size()) {
      in_image_.assign(g_.capacity(), 0);
      for (VertexId v : emb_.images) in_image_[v] = 1;
      if (!closure_ok()) return true;
      return fn_(emb_);
    }
    const int r = order_[depth];
    auto try_vertex = [&](VertexId v) {
      if (!fits(r, v, depth)) return true;
      emb_.images[r] = v;
      used_[v] = 1;
      bool go = search(depth + 1);
      used_[v] = 0;
      emb_.images[r] = -1;
      return go;
    };
    if (anchor_[depth] >= 0) {
      for (VertexId v : g_.neighbors(emb_.images[anchor_[depth]]))
        if (!try_vertex(v)) return false;
    } else {
      for (VertexId v : g_.vertices())
        if (!try_vertex(v)) return false;
    }
    return true;
  }

  const Graph& g_;
  const Pattern& p_;
  const MatchOptions& opt_;
  const std::function<bool(const Embedding&)>& fn_;
  const std::vector<int>& order_;
  std::vector<char> used_;
  std::vector<char> in_image_;
  std::vector<int> anchor_;
  std::vector<int> max_nbrs_;
  Embedding emb_;
};

}  // namespace

void for_each_embedding(const Graph& g, const Pattern& p,
                        const std::function<bool(const Embedding&)>& fn, const MatchOptions& opt) {
  Matcher(g, p, opt, fn).run();
}

std::optional<Embedding> find_induced(const Graph& g, const Pattern& p, const MatchOptions& opt) {
  std::optional<Embedding> out;
  for_each_embedding(
      g, p,
      [&](const Embedding& e) {
        out = e;
        return false;
      },
      opt);
  return out;
}

std::vector<Embedding> brute_force_embeddings(const Graph& g, const Pattern& p,
                                              const MatchOptions& opt) {
  std::vector<Embedding> out;
  const int k = p.size();
  const auto& vs = g.vertices();
  std::vector<char> excluded(g.capacity(), 0);
  for (VertexId v : opt.exclude)
    if (g.has_vertex(v)) excluded[v] = 1;
  auto color_of = [&](VertexId v) {
    return opt.colors.empty() || static_cast<std::size_t>(v) >= opt.colors.size() ? Color::Uncolored
                                                                                  : opt.colors[v];
  };
  Embedding e;
  e.pattern = &p;
  e.images.assign(k, -1);
  std::vector<char> used(g.capacity(), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      for (int a = 0; a < k; ++a) {
        VertexId v = e.images[a];
        const auto& db = p.degree_bound(a);
        if (g.degree(v) < db.min || g.degree(v) > db.max) return;
        Color c = color_of(v);
        switch (p.color_req(a)) {
          case ColorReq::Any: break;
          case ColorReq::Black:
            if (c != Color::Black) return;
            break;
          case ColorReq::Uncolored:
            if (c != Color::Uncolored) return;
            break;
          case ColorReq::NotWhite:
            if (c == Color::White) return;
            break;
        }
        for (int b = a + 1; b < k; ++b) {
          bool adj = g.adjacent(v, e.images[b]);
          EdgeKind kd = p.kind(a, b);
          if (kd == EdgeKind::Required && !adj) return;
          if (kd == EdgeKind::Forbidden && adj) return;
        }
        if (p.is_closed(a))
          for (VertexId w : g.neighbors(v))
            if (std::find(e.images.begin(), e.images.end(), w) == e.images.end()) return;
      }
      out.push_back(e);
      return;
    }
    for (VertexId v : vs) {
      if (used[v] || excluded[v]) continue;
      used[v] = 1;
      e.images[i] = v;
      rec(i + 1);
      used[v] = 0;
    }
    e.images[i] = -1;
  };
  rec(0);
  return out;
}

}  // namespace dim
