#pragma once

#include <optional>

#include "dim/graph.hpp"
#include "dim/pattern.hpp"

namespace dim {

// The induced S(2,2,2): centre c, legs c-a1-b1, c-a2-b2, c-a3-b3.
const Pattern& long_claw_pattern();

std::optional<Embedding> contains_s222(const Graph& g);

inline bool is_s222_free(const Graph& g) { return !contains_s222(g).has_value(); }

}  // namespace dim
