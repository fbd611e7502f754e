#include "wordspot/fonts.hpp"

#include <string>

#include "wordspot/error.hpp"

namespace wordspot {

namespace {

// 8x16 cells. Row 2 is the ascender line, row 11 the baseline, rows 12-14
// hold descenders; both faces put the x-height at row 5.
struct GlyphArt {
  char ch;
  const char* rows[kGlyphHeight];
};

constexpr GlyphArt kFontA[26] = {
    {'a',
     {"........",
      "........",
      "........",
      "........",
      "........",
      ".####...",
      "....##..",
      ".#####..",
      "##..##..",
      "##..##..",
      "##..##..",
      ".###.##.",
      "........",
      "........",
      "........",
      "........"}},
    {'b',
     {"........",
      "........",
      "##......",
      "##......",
      "##......",
      "#####...",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "#####...",
      "........",
      "........",
      "........",
      "........"}},
    {'c',
     {"........",
      "........",
      "........",
      "........",
      "........",
      ".####...",
      "##..##..",
      "##......",
      "##......",
      "##......",
      "##..##..",
      ".####...",
      "........",
      "........",
      "........",
      "........"}},
    {'d',
     {"........",
      "........",
      "....##..",
      "....##..",
      "....##..",
      ".#####..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      ".#####..",
      "........",
      "........",
      "........",
      "........"}},
    {'e',
     {"........",
      "........",
      "........",
      "........",
      "........",
      ".####...",
      "##..##..",
      "##..##..",
      "######..",
      "##......",
      "##..##..",
      ".####...",
      "........",
      "........",
      "........",
      "........"}},
    {'f',
     {"........",
      "........",
      "..###...",
      ".##.##..",
      ".##.....",
      "####....",
      ".##.....",
      ".##.....",
      ".##.....",
      ".##.....",
      ".##.....",
      ".##.....",
      "........",
      "........",
      "........",
      "........"}},
    {'g',
     {"........",
      "........",
      "........",
      "........",
      "........",
      ".#####..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      ".#####..",
      "....##..",
      "....##..",
      "##..##..",
      ".####...",
      "........"}},
    {'h',
     {"........",
      "........",
      "##......",
      "##......",
      "##......",
      "#####...",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "........",
      "........",
      "........",
      "........"}},
    {'i',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "###.....",
      ".##.....",
      ".##.....",
      ".##.....",
      ".##.....",
      ".##.....",
      "####....",
      "........",
      "........",
      "........",
      "........"}},
    {'j',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "..###...",
      "...##...",
      "...##...",
      "...##...",
      "...##...",
      "...##...",
      "...##...",
      "...##...",
      "##.##...",
      ".###....",
      "........"}},
    {'k',
     {"........",
      "........",
      "##......",
      "##......",
      "##......",
      "##..##..",
      "##.##...",
      "####....",
      "###.....",
      "####....",
      "##.##...",
      "##..##..",
      "........",
      "........",
      "........",
      "........"}},
    {'l',
     {"........",
      "........",
      "###.....",
      ".##.....",
      ".##.....",
      ".##.....",
      ".##.....",
      ".##.....",
      ".##.....",
      ".##.....",
      ".##.....",
      "####....",
      "........",
      "........",
      "........",
      "........"}},
    {'m',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "######..",
      "##.#.##.",
      "##.#.##.",
      "##.#.##.",
      "##.#.##.",
      "##.#.##.",
      "##.#.##.",
      "........",
      "........",
      "........",
      "........"}},
    {'n',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "#####...",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "........",
      "........",
      "........",
      "........"}},
    {'o',
     {"........",
      "........",
      "........",
      "........",
      "........",
      ".####...",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      ".####...",
      "........",
      "........",
      "........",
      "........"}},
    {'p',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "#####...",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "#####...",
      "##......",
      "##......",
      "##......",
      "........"}},
    {'q',
     {"........",
      "........",
      "........",
      "........",
      "........",
      ".#####..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      ".#####..",
      "....##..",
      "....##..",
      "....##..",
      "........"}},
    {'r',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "##.###..",
      "####....",
      "##......",
      "##......",
      "##......",
      "##......",
      "##......",
      "........",
      "........",
      "........",
      "........"}},
    {'s',
     {"........",
      "........",
      "........",
      "........",
      "........",
      ".#####..",
      "##......",
      "##......",
      ".####...",
      "....##..",
      "....##..",
      "#####...",
      "........",
      "........",
      "........",
      "........"}},
    {'t',
     {"........",
      "........",
      "........",
      ".##.....",
      ".##.....",
      "#####...",
      ".##.....",
      ".##.....",
      ".##.....",
      ".##.....",
      ".##.....",
      "..###...",
      "........",
      "........",
      "........",
      "........"}},
    {'u',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      ".#####..",
      "........",
      "........",
      "........",
      "........"}},
    {'v',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      ".####...",
      ".####...",
      "..##....",
      "........",
      "........",
      "........",
      "........"}},
    {'w',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "##...##.",
      "##...##.",
      "##...##.",
      "##...##.",
      "##...##.",
      "##.#.##.",
      ".##.##..",
      "........",
      "........",
      "........",
      "........"}},
    {'x',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "##..##..",
      "##..##..",
      ".####...",
      "..##....",
      ".####...",
      "##..##..",
      "##..##..",
      "........",
      "........",
      "........",
      "........"}},
    {'y',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      ".#####..",
      "....##..",
      "##..##..",
      ".####...",
      "........"}},
    {'z',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "######..",
      "....##..",
      "...##...",
      "..##....",
      ".##.....",
      "##......",
      "######..",
      "........",
      "........",
      "........",
      "........"}},
};

constexpr GlyphArt kFontB[26] = {
    {'a',
     {"........",
      "........",
      "........",
      "........",
      "........",
      ".#####..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##.###..",
      ".##.##..",
      "........",
      "........",
      "........",
      "........"}},
    {'b',
     {"........",
      "........",
      "##......",
      "##......",
      "##......",
      "##.##...",
      "###.##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "#####...",
      "........",
      "........",
      "........",
      "........"}},
    {'c',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "..####..",
      ".##.....",
      "##......",
      "##......",
      "##......",
      ".##.....",
      "..####..",
      "........",
      "........",
      "........",
      "........"}},
    {'d',
     {"........",
      "........",
      "....##..",
      "....##..",
      "....##..",
      ".##.##..",
      "##.###..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      ".#####..",
      "........",
      "........",
      "........",
      "........"}},
    {'e',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "..###...",
      ".##.##..",
      "##...##.",
      "#######.",
      "##......",
      ".##.....",
      "..####..",
      "........",
      "........",
      "........",
      "........"}},
    {'f',
     {"........",
      "........",
      "...###..",
      "..##....",
      "..##....",
      "######..",
      "..##....",
      "..##....",
      "..##....",
      "..##....",
      "..##....",
      "..##....",
      "........",
      "........",
      "........",
      "........"}},
    {'g',
     {"........",
      "........",
      "........",
      "........",
      "........",
      ".##.##..",
      "##.###..",
      "##..##..",
      "##..##..",
      "##..##..",
      ".#####..",
      "....##..",
      "....##..",
      "....##..",
      "#####...",
      "........"}},
    {'h',
     {"........",
      "........",
      "##......",
      "##......",
      "##......",
      "##.##...",
      "###.##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "........",
      "........",
      "........",
      "........"}},
    {'i',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "##......",
      "##......",
      "##......",
      "##......",
      "##......",
      "##......",
      "##......",
      "........",
      "........",
      "........",
      "........"}},
    {'j',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "...##...",
      "...##...",
      "...##...",
      "...##...",
      "...##...",
      "...##...",
      "...##...",
      "...##...",
      "...##...",
      "####....",
      "........"}},
    {'k',
     {"........",
      "........",
      "##......",
      "##......",
      "##......",
      "##...##.",
      "##..##..",
      "##.##...",
      "####....",
      "##.##...",
      "##..##..",
      "##...##.",
      "........",
      "........",
      "........",
      "........"}},
    {'l',
     {"........",
      "........",
      "##......",
      "##......",
      "##......",
      "##......",
      "##......",
      "##......",
      "##......",
      "##......",
      "##......",
      ".###....",
      "........",
      "........",
      "........",
      "........"}},
    {'m',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "####.#..",
      "##.####.",
      "##.#.##.",
      "##.#.##.",
      "##.#.##.",
      "##.#.##.",
      "##.#.##.",
      "........",
      "........",
      "........",
      "........"}},
    {'n',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "##.##...",
      "###.##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "........",
      "........",
      "........",
      "........"}},
    {'o',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "..###...",
      ".##.##..",
      "##...##.",
      "##...##.",
      "##...##.",
      ".##.##..",
      "..###...",
      "........",
      "........",
      "........",
      "........"}},
    {'p',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "##.##...",
      "###.##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "#####...",
      "##......",
      "##......",
      "##......",
      "........"}},
    {'q',
     {"........",
      "........",
      "........",
      "........",
      "........",
      ".##.##..",
      "##.###..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      ".#####..",
      "....##..",
      "....##..",
      "....##..",
      "........"}},
    {'r',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "##.##...",
      "###.....",
      "##......",
      "##......",
      "##......",
      "##......",
      "##......",
      "........",
      "........",
      "........",
      "........"}},
    {'s',
     {"........",
      "........",
      "........",
      "........",
      "........",
      ".#####..",
      "##......",
      ".###....",
      "...##...",
      "....##..",
      "....##..",
      "#####...",
      "........",
      "........",
      "........",
      "........"}},
    {'t',
     {"........",
      "........",
      "........",
      ".##.....",
      ".##.....",
      "######..",
      ".##.....",
      ".##.....",
      ".##.....",
      ".##.....",
      ".##.....",
      "..####..",
      "........",
      "........",
      "........",
      "........"}},
    {'u',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      "##..##..",
      ".###.##.",
      "........",
      "........",
      "........",
      "........"}},
    {'v',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "##...##.",
      "##...##.",
      ".##.##..",
      ".##.##..",
      "..###...",
      "..###...",
      "...#....",
      "........",
      "........",
      "........",
      "........"}},
    {'w',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "##...##.",
      "##...##.",
      "##...##.",
      "##...##.",
      "##.#.##.",
      "##.#.##.",
      ".##.##..",
      "........",
      "........",
      "........",
      "........"}},
    {'x',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "##...##.",
      ".##.##..",
      "..###...",
      "..###...",
      "..###...",
      ".##.##..",
      "##...##.",
      "........",
      "........",
      "........",
      "........"}},
    {'y',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "##...##.",
      "##...##.",
      ".##.##..",
      ".##.##..",
      "..###...",
      "..###...",
      "..##....",
      ".##.....",
      ".##.....",
      "##......",
      "........"}},
    {'z',
     {"........",
      "........",
      "........",
      "........",
      "........",
      "#######.",
      ".....##.",
      "....##..",
      "...##...",
      ".##.....",
      "##......",
      "#######.",
      "........",
      "........",
      "........",
      "........"}},
};

Glyph build(const GlyphArt& art) {
  Glyph g{};
  g.ch = art.ch;
  g.left = kGlyphWidth;
  g.right = -1;
  for (int y = 0; y < kGlyphHeight; ++y) {
    std::uint8_t bits = 0;
    for (int x = 0; x < kGlyphWidth; ++x) {
      if (art.rows[y][x] != '#') continue;
      bits |= static_cast<std::uint8_t>(0x80u >> x);
      if (x < g.left) g.left = x;
      if (x > g.right) g.right = x;
    }
    g.rows[y] = bits;
  }
  return g;
}

template <std::size_t N>
std::array<Glyph, N> build_all(const GlyphArt (&arts)[N]) {
  std::array<Glyph, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = build(arts[i]);
  return out;
}

}  // namespace

const Glyph& glyph(Font font, char ch) {
  static const auto font_a = build_all(kFontA);
  static const auto font_b = build_all(kFontB);
  if (ch < 'a' || ch > 'z') {
    throw InvalidArgument(std::string("unsupported character '") + ch + "' (fonts cover a-z)");
  }
  const auto& table = font == Font::A ? font_a : font_b;
  return table[static_cast<std::size_t>(ch - 'a')];
}

bool has_glyph(char ch) noexcept { return ch >= 'a' && ch <= 'z'; }

}  // namespace wordspot
