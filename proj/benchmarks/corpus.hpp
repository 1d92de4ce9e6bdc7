#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dim/oracle.hpp"

namespace bench {

// Disjoint union of generated pieces of about 12 vertices; a long claw is
// connected, so the union stays S(2,2,2)-free at any size.
inline dim::Graph union_of(dim::Model m, int n, std::uint64_t seed) {
  std::vector<dim::Edge> es;
  int base = 0;
  while (base < n) {
    int k = std::min(12, n - base);
    dim::Graph piece;
    try {
      piece = dim::generate({m, k, seed++, 0.25});
    } catch (const std::runtime_error&) {
      continue;
    }
    for (auto [u, v] : piece.edges()) es.emplace_back(u + base, v + base);
    base += k;
  }
  return dim::Graph(n, es);
}

}  // namespace bench
