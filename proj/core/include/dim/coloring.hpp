#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dim/color.hpp"
#include "dim/graph.hpp"

namespace dim {

class PartialColoring {
 public:
  PartialColoring() = default;
  explicit PartialColoring(VertexId capacity) : state_(capacity, Color::Uncolored) {}

  Color operator[](VertexId v) const {
    return v >= 0 && static_cast<std::size_t>(v) < state_.size() ? state_[v] : Color::Uncolored;
  }
  void set(VertexId v, Color c);
  std::span<const Color> raw() const { return state_; }

  bool is_black(VertexId v) const { return (*this)[v] == Color::Black; }
  bool is_white(VertexId v) const { return (*this)[v] == Color::White; }
  bool is_uncolored(VertexId v) const { return (*this)[v] == Color::Uncolored; }

  std::vector<VertexId> with_color(const Graph& g, Color c) const;
  bool complete_on(const Graph& g) const;
  PartialColoring restricted_to(const Graph& g) const;

  friend bool operator==(const PartialColoring& a, const PartialColoring& b);

 private:
  std::vector<Color> state_;
};

int black_neighbors(const Graph& g, const PartialColoring& c, VertexId v);

bool is_feasible_partial(const Graph& g, const PartialColoring& c);

// Throws std::logic_error when some vertex of g is uncolored.
bool verify_complete(const Graph& g, const PartialColoring& c);

struct Witness {
  std::string rule;
  std::vector<std::pair<std::string, VertexId>> embedding;
  VertexId vertex = -1;
  std::string reason;

  std::string describe() const;
};

struct Completed {
  PartialColoring coloring;
};
struct Refuted {
  Witness witness;
};
struct Progress {
  PartialColoring coloring;
};
using Verdict = std::variant<Completed, Refuted, Progress>;

inline bool refuted(const Verdict& v) { return std::holds_alternative<Refuted>(v); }
const PartialColoring& coloring_of(const Verdict& v);

Verdict assign(const Graph& g, const PartialColoring& c, VertexId v, Color color);

struct CleanTraceEntry {
  std::vector<VertexId> whites;
  std::vector<Edge> black_pairs;
  std::vector<Edge> removed_edges;
};

struct CleanResult {
  Graph graph;
  PartialColoring coloring;
  CleanTraceEntry entry;
};

CleanResult clean(const Graph& g, const PartialColoring& c);

// Certificate text: one "vertex B|W" line per vertex, 1-based.
void write_certificate(std::ostream& out, const Graph& g, const PartialColoring& c);
PartialColoring read_certificate(std::istream& in, const Graph& g);

}  // namespace dim
