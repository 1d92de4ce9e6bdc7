#pragma once

#include <climits>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dim/color.hpp"
#include "dim/graph.hpp"

namespace dim {

enum class EdgeKind : std::uint8_t { Forbidden, Required, Optional };
enum class ColorReq : std::uint8_t { Any, Black, Uncolored, NotWhite };

struct DegreeBound {
  int min = 0;
  int max = INT_MAX;
};

// Role-labelled pattern. Pairs of roles not mentioned are Forbidden unless
// the pattern was built with induced = false, in which case Optional.
class Pattern {
 public:
  explicit Pattern(std::string name, bool induced = true);

  int role(std::string_view name);
  Pattern& edge(std::string_view a, std::string_view b);
  Pattern& maybe(std::string_view a, std::string_view b);
  Pattern& forbid(std::string_view a, std::string_view b);
  Pattern& degree(std::string_view r, int exact);
  Pattern& degree(std::string_view r, int lo, int hi);
  Pattern& closed(std::string_view r);
  Pattern& color(std::string_view r, ColorReq req);

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(roles_.size()); }
  const std::string& role_name(int i) const { return roles_[i]; }
  int index_of(std::string_view name) const;
  EdgeKind kind(int a, int b) const;
  const DegreeBound& degree_bound(int r) const { return degree_[r]; }
  bool is_closed(int r) const { return closed_[r]; }
  ColorReq color_req(int r) const { return color_[r]; }

  // Search order: most-constrained first, then roles attached by required
  // edges to already placed ones.
  const std::vector<int>& order() const;

 private:
  void set_kind(int a, int b, EdgeKind k);

  std::string name_;
  bool induced_;
  std::vector<std::string> roles_;
  std::vector<std::vector<EdgeKind>> kind_;
  std::vector<std::vector<bool>> explicit_;
  std::vector<DegreeBound> degree_;
  std::vector<bool> closed_;
  std::vector<ColorReq> color_;
  mutable std::vector<int> order_;
};

// images[i] is the host vertex of role i.
struct Embedding {
  const Pattern* pattern = nullptr;
  std::vector<VertexId> images;

  VertexId operator[](std::string_view role) const;
  VertexId operator[](int i) const { return images[i]; }
};

struct MatchOptions {
  std::span<const VertexId> exclude{};
  std::span<const Color> colors{};  // indexed by VertexId; empty = all uncolored
};

// Enumerates embeddings in canonical order; the callback returns false to stop.
void for_each_embedding(const Graph& g, const Pattern& p,
                        const std::function<bool(const Embedding&)>& fn,
                        const MatchOptions& opt = {});

std::optional<Embedding> find_induced(const Graph& g, const Pattern& p,
                                      const MatchOptions& opt = {});

// Reference implementation over all injective role assignments.
std::vector<Embedding> brute_force_embeddings(const Graph& g, const Pattern& p,
                                              const MatchOptions& opt = {});

}  // namespace dim
