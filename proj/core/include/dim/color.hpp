#pragma once

#include <cstdint>

namespace dim {

enum class Color : std::uint8_t { Uncolored = 0, Black = 1, White = 2 };

constexpr Color opposite(Color c) {
  return c == Color::Black ? Color::White : c == Color::White ? Color::Black : Color::Uncolored;
}

constexpr char color_char(Color c) {
  return c == Color::Black ? 'B' : c == Color::White ? 'W' : '?';
}

}  // namespace dim
