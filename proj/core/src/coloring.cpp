#include "dim/coloring.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dim/graph_io.hpp"

namespace dim {

void PartialColoring::set(VertexId v, Color c) {
  if (v < 0) throw std::out_of_range("negative vertex id");
  if (static_cast<std::size_t>(v) >= state_.size()) state_.resize(v + 1, Color::Uncolored);
  state_[v] = c;
}

std::vector<VertexId> PartialColoring::with_color(const Graph& g, Color c) const {
  std::vector<VertexId> out;
  for (VertexId v : g.vertices())
    if ((*this)[v] == c) out.push_back(v);
  return out;
}

bool PartialColoring::complete_on(const Graph& g) const {
  for (VertexId v : g.vertices())
    if (is_uncolored(v)) return false;
  return true;
}

PartialColoring PartialColoring::restricted_to(const Graph& g) const {
  PartialColoring out(g.capacity());
  for (VertexId v : g.vertices()) out.state_[v] = (*this)[v];
  return out;
}

bool operator==(const PartialColoring& a, const PartialColoring& b) {
  const std::size_t n = std::max(a.state_.size(), b.state_.size());
  for (std::size_t v = 0; v < n; ++v)
    if (a[static_cast<VertexId>(v)] != b[static_cast<VertexId>(v)]) return false;
  return true;
}

int black_neighbors(const Graph& g, const PartialColoring& c, VertexId v) {
  int k = 0;
  for (VertexId w : g.neighbors(v))
    if (c.is_black(w)) ++k;
  return k;
}

bool is_feasible_partial(const Graph& g, const PartialColoring& c) {
  for (VertexId v : g.vertices()) {
    if (c.is_white(v)) {
      for (VertexId w : g.neighbors(v))
        if (c.is_white(w)) return false;
    } else if (c.is_black(v) && black_neighbors(g, c, v) > 1) {
      return false;
    }
  }
  return true;
}

bool verify_complete(const Graph& g, const PartialColoring& c) {
  for (VertexId v : g.vertices())
    if (c.is_uncolored(v))
      throw std::logic_error("verify_complete: vertex " + std::to_string(v + 1) + " uncolored");
  for (VertexId v : g.vertices()) {
    if (c.is_white(v)) {
      for (VertexId w : g.neighbors(v))
        if (c.is_white(w)) return false;
    } else if (black_neighbors(g, c, v) != 1) {
      return false;
    }
  }
  return true;
}

std::string Witness::describe() const {
  std::ostringstream os;
  os << rule;
  if (vertex >= 0) os << " at vertex " << vertex + 1;
  if (!embedding.empty()) {
    os << " [";
    for (std::size_t i = 0; i < embedding.size(); ++i)
      os << (i ? "," : "") << embedding[i].first << ':' << embedding[i].second + 1;
    os << ']';
  }
  if (!reason.empty()) os << ": " << reason;
  return os.str();
}

const PartialColoring& coloring_of(const Verdict& v) {
  if (auto* p = std::get_if<Progress>(&v)) return p->coloring;
  if (auto* p = std::get_if<Completed>(&v)) return p->coloring;
  throw std::logic_error("coloring_of: refuted verdict");
}

Verdict assign(const Graph& g, const PartialColoring& c, VertexId v, Color color) {
  auto fail = [&](std::string why) {
    return Verdict{Refuted{Witness{"assign", {}, v, std::move(why)}}};
  };
  if (!g.has_vertex(v)) throw std::out_of_range("assign: no vertex " + std::to_string(v));
  if (color == Color::Uncolored) throw std::invalid_argument("assign: Uncolored");
  if (c[v] == color) return Progress{c};
  if (c[v] == opposite(color)) return fail("already colored opposite");
  if (color == Color::White) {
    for (VertexId w : g.neighbors(v))
      if (c.is_white(w)) return fail("white neighbour " + std::to_string(w + 1));
  } else {
    int k = 0;
    for (VertexId w : g.neighbors(v))
      if (c.is_black(w)) {
        if (++k > 1) return fail("two black neighbours");
        if (black_neighbors(g, c, w) >= 1)
          return fail("black neighbour " + std::to_string(w + 1) + " already paired");
      }
  }
  PartialColoring out = c;
  out.set(v, color);
  return Progress{std::move(out)};
}

CleanResult clean(const Graph& g, const PartialColoring& c) {
  CleanTraceEntry entry;
  std::vector<char> gone(g.capacity(), 0);
  for (VertexId v : g.vertices()) {
    if (c.is_white(v)) {
      entry.whites.push_back(v);
      gone[v] = 1;
    } else if (c.is_black(v)) {
      for (VertexId w : g.neighbors(v))
        if (w > v && c.is_black(w)) {
          entry.black_pairs.emplace_back(v, w);
          gone[v] = gone[w] = 1;
        }
    }
  }
  std::vector<VertexId> removed;
  for (VertexId v : g.vertices())
    if (gone[v]) removed.push_back(v);
  for (auto [u, v] : g.edges())
    if (gone[u] || gone[v]) entry.removed_edges.emplace_back(u, v);
  Graph h = g.without(removed);
  return {h, c.restricted_to(h), std::move(entry)};
}

void write_certificate(std::ostream& out, const Graph& g, const PartialColoring& c) {
  for (VertexId v : g.vertices()) out << v + 1 << ' ' << color_char(c[v]) << '\n';
}

PartialColoring read_certificate(std::istream& in, const Graph& g) {
  PartialColoring c(g.capacity());
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ss(raw);
    long long v;
    std::string col;
    if (!(ss >> v)) {
      std::string tok;
      std::istringstream probe(raw);
      if (probe >> tok) throw ParseError(line, "expected vertex id");
      continue;
    }
    if (!(ss >> col) || (col != "B" && col != "W")) throw ParseError(line, "expected B or W");
    std::string rest;
    if (ss >> rest) throw ParseError(line, "unexpected token '" + rest + "'");
    if (!g.has_vertex(static_cast<VertexId>(v - 1))) throw ParseError(line, "unknown vertex");
    Color want = col == "B" ? Color::Black : Color::White;
    if (!c.is_uncolored(static_cast<VertexId>(v - 1)) && c[static_cast<VertexId>(v - 1)] != want)
      throw ParseError(line, "vertex colored twice");
    c.set(static_cast<VertexId>(v - 1), want);
  }
  return c;
}

}  // namespace dim
