#include "dim/graph_io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace dim {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

long long read_int(std::istringstream& ss, int line, const char* what) {
  long long x;
  if (!(ss >> x)) throw ParseError(line, std::string("expected ") + what);
  return x;
}

void expect_end(std::istringstream& ss, int line) {
  std::string rest;
  if (ss >> rest) throw ParseError(line, "unexpected token '" + rest + "'");
}

Graph parse_lines(std::istream& in, std::vector<VertexId>* subset) {
  std::string raw;
  int line = 0;
  std::optional<long long> n, m;
  std::vector<Edge> edges;
  int header_line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = strip_comment(raw);
    if (blank(s)) continue;
    std::istringstream ss(s);
    if (subset && s.find("U:") != std::string::npos) {
      auto pos = s.find("U:");
      if (!blank(s.substr(0, pos))) throw ParseError(line, "malformed U: line");
      if (!n) throw ParseError(line, "U: line before header");
      std::istringstream us(s.substr(pos + 2));
      long long x;
      while (us >> x) {
        if (x < 1 || x > *n) throw ParseError(line, "U vertex out of range");
        subset->push_back(static_cast<VertexId>(x - 1));
      }
      if (!us.eof()) throw ParseError(line, "malformed U: line");
      continue;
    }
    if (!n) {
      n = read_int(ss, line, "vertex count");
      m = read_int(ss, line, "edge count");
      expect_end(ss, line);
      if (*n < 0 || *m < 0) throw ParseError(line, "negative count");
      header_line = line;
      continue;
    }
    long long u = read_int(ss, line, "edge endpoint");
    long long v = read_int(ss, line, "edge endpoint");
    expect_end(ss, line);
    if (u == v) throw ParseError(line, "self-loop");
    if (u < 1 || v < 1 || u > *n || v > *n) throw ParseError(line, "endpoint out of range");
    if (static_cast<long long>(edges.size()) >= *m) throw ParseError(line, "more edges than declared");
    edges.emplace_back(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
  }
  if (!n) throw ParseError(line, "missing header");
  if (static_cast<long long>(edges.size()) != *m)
    throw ParseError(header_line, "declared " + std::to_string(*m) + " edges, found " +
                                      std::to_string(edges.size()));
  return Graph(static_cast<VertexId>(*n), edges);
}

}  // namespace

Graph load_graph(std::istream& in) { return parse_lines(in, nullptr); }

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return load_graph(in);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_graph(in);
}

GraphWithSubset load_graph_with_subset(std::istream& in) {
  GraphWithSubset out;
  out.graph = parse_lines(in, &out.subset);
  return out;
}

void save_graph(std::ostream& out, const Graph& g) {
  Graph c = g.compacted();
  auto es = c.edges();
  out << c.vertex_count() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u + 1 << ' ' << v + 1 << '\n';
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  save_graph(out, g);
  return out.str();
}

}  // namespace dim
