#pragma once

#include <array>
#include <cstdint>

namespace wordspot {

/// Embedded bitmap faces sharing one set of vertical metrics. A is the
/// indexing face; B redraws the letter shapes (single-storey a and g, round
/// bowls, diagonal v/y, plain stems) and serves as the "other font" in
/// robustness runs.
enum class Font { A, B };

inline constexpr int kGlyphWidth = 8;
inline constexpr int kGlyphHeight = 16;

struct Glyph {
  char ch;
  /// Bit 7 is column 0.
  std::array<std::uint8_t, kGlyphHeight> rows;
  /// Leftmost and rightmost inked columns.
  int left;
  int right;

  bool at(int x, int y) const { return (rows[y] >> (7 - x)) & 1; }
  int ink_width() const { return right - left + 1; }
};

/// Throws InvalidArgument for characters outside a-z.
const Glyph& glyph(Font font, char ch);
bool has_glyph(char ch) noexcept;

}  // namespace wordspot
