#include "dim/long_claw.hpp"

namespace dim {

const Pattern& long_claw_pattern() {
  static const Pattern p = [] {
    Pattern q("long-claw");
    q.edge("c", "a1").edge("a1", "b1");
    q.edge("c", "a2").edge("a2", "b2");
    q.edge("c", "a3").edge("a3", "b3");
    return q;
  }();
  return p;
}

std::optional<Embedding> contains_s222(const Graph& g) {
  const Pattern& p = long_claw_pattern();
  static const int ic = p.index_of("c"), ia1 = p.index_of("a1"), ib1 = p.index_of("b1"),
                   ia2 = p.index_of("a2"), ib2 = p.index_of("b2"), ia3 = p.index_of("a3"),
                   ib3 = p.index_of("b3");
  for (VertexId c : g.vertices()) {
    const auto& nc = g.neighbors(c);
    if (nc.size() < 3) continue;
    auto outside = [&](VertexId b) { return b != c && !g.adjacent(b, c); };
    for (std::size_t i = 0; i < nc.size(); ++i) {
      VertexId a1 = nc[i];
      for (std::size_t j = i + 1; j < nc.size(); ++j) {
        VertexId a2 = nc[j];
        if (g.adjacent(a1, a2)) continue;
        for (std::size_t k = j + 1; k < nc.size(); ++k) {
          VertexId a3 = nc[k];
          if (g.adjacent(a1, a3) || g.adjacent(a2, a3)) continue;
          for (VertexId b1 : g.neighbors(a1)) {
            if (!outside(b1) || g.adjacent(b1, a2) || g.adjacent(b1, a3)) continue;
            for (VertexId b2 : g.neighbors(a2)) {
              if (b2 == b1 || !outside(b2) || g.adjacent(b2, a1) || g.adjacent(b2, a3) ||
                  g.adjacent(b2, b1))
                continue;
              for (VertexId b3 : g.neighbors(a3)) {
                if (b3 == b1 || b3 == b2 || !outside(b3) || g.adjacent(b3, a1) ||
                    g.adjacent(b3, a2) || g.adjacent(b3, b1) || g.adjacent(b3, b2))
                  continue;
                Embedding e;
                e.pattern = &p;
                e.images.assign(p.size(), -1);
                e.images[ic] = c;
                e.images[ia1] = a1;
                e.images[ib1] = b1;
                e.images[ia2] = a2;
                e.images[ib2] = b2;
                e.images[ia3] = a3;
                e.images[ib3] = b3;
                return e;
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace dim
