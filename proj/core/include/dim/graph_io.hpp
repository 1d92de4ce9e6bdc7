#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dim/graph.hpp"

namespace dim {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Edge-list text: first data line "n m", then m lines "u v" (1-based).
// '#' starts a comment. Vertex label k becomes VertexId k-1.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);
Graph parse_graph(const std::string& text);

// Same format plus one line "U: a b c ..." naming required vertices.
struct GraphWithSubset {
  Graph graph;
  std::vector<VertexId> subset;
};
GraphWithSubset load_graph_with_subset(std::istream& in);

// Writes the compacted graph with sorted edges.
void save_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);

}  // namespace dim
