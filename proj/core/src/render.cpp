#include "wordspot/render.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <set>

#include "wordspot/error.hpp"
#include "wordspot/netpbm.hpp"

namespace wordspot {

Font parse_font(std::string_view name) {
  if (name == "A" || name == "a") return Font::A;
  if (name == "B" || name == "b") return Font::B;
  throw InvalidArgument("unknown font '" + std::string(name) + "' (expected A or B)");
}

const char* font_name(Font font) { return font == Font::A ? "A" : "B"; }

void CorpusSpec::validate() const {
  if (pages < 1) throw InvalidArgument("corpus spec: pages must be >= 1");
  if (words_per_page < 1) throw InvalidArgument("corpus spec: words_per_page must be >= 1");
  if (scale < 1) throw InvalidArgument("corpus spec: scale must be >= 1");
  if (margin < 0 || word_gap < 0 || line_gap < 0 || page_width < 0) {
    throw InvalidArgument("corpus spec: spacing values must be non-negative");
  }
  if (lexicon.empty()) throw InvalidArgument("corpus spec: lexicon is empty");
  for (const auto& w : lexicon) {
    if (w.empty()) throw InvalidArgument("corpus spec: empty lexicon entry");
    for (char c : w) {
      if (!has_glyph(c)) throw InvalidArgument("corpus spec: unsupported character in '" + w + "'");
    }
  }
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <class T>
T parse_number(const std::string& key, const std::string& value, std::size_t line) {
  T v{};
  const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (value.empty() || ec != std::errc() || end != value.data() + value.size()) {
    throw ParseError(ParseError::Unit::Line, line, "invalid value for " + key + ": '" + value + "'");
  }
  return v;
}

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    std::string w = trim(std::string_view(s).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (!w.empty()) out.push_back(std::move(w));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

CorpusSpec parse_corpus_spec(std::istream& in, const std::filesystem::path& base_dir) {
  CorpusSpec spec;
  spec.lexicon.clear();
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string text = trim(std::string_view(raw).substr(0, hash));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError(ParseError::Unit::Line, line, "expected key=value");
    const std::string key = trim(std::string_view(text).substr(0, eq));
    const std::string value = trim(std::string_view(text).substr(eq + 1));
    if (key == "seed") {
      spec.seed = parse_number<std::uint64_t>(key, value, line);
    } else if (key == "pages") {
      spec.pages = parse_number<int>(key, value, line);
    } else if (key == "words_per_page") {
      spec.words_per_page = parse_number<int>(key, value, line);
    } else if (key == "scale") {
      spec.scale = parse_number<int>(key, value, line);
    } else if (key == "margin") {
      spec.margin = parse_number<int>(key, value, line);
    } else if (key == "word_gap") {
      spec.word_gap = parse_number<int>(key, value, line);
    } else if (key == "line_gap") {
      spec.line_gap = parse_number<int>(key, value, line);
    } else if (key == "page_width") {
      spec.page_width = parse_number<int>(key, value, line);
    } else if (key == "font") {
      try {
        spec.font = parse_font(value);
      } catch (const InvalidArgument& e) {
        throw ParseError(ParseError::Unit::Line, line, e.what());
      }
    } else if (key == "lexicon") {
      for (auto& w : split_words(value)) spec.lexicon.push_back(std::move(w));
    } else if (key == "lexicon_file") {
      std::ifstream lex(base_dir / value);
      if (!lex) throw IoError("cannot open lexicon file " + (base_dir / value).string());
      std::string w;
      while (std::getline(lex, w)) {
        w = trim(w);
        if (!w.empty() && w[0] != '#') spec.lexicon.push_back(w);
      }
    } else {
      throw ParseError(ParseError::Unit::Line, line, "unknown key '" + key + "'");
    }
  }
  spec.validate();
  return spec;
}

CorpusSpec read_corpus_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return parse_corpus_spec(in, path.parent_path());
  } catch (const ParseError& e) {
    throw e.in(path.string());
  }
}

void write_corpus_spec(const CorpusSpec& spec, std::ostream& out) {
  out << "seed=" << spec.seed << "\npages=" << spec.pages
      << "\nwords_per_page=" << spec.words_per_page << "\nfont=" << font_name(spec.font)
      << "\nscale=" << spec.scale << '\n';
  if (spec.margin) out << "margin=" << spec.margin << '\n';
  if (spec.word_gap) out << "word_gap=" << spec.word_gap << '\n';
  if (spec.line_gap) out << "line_gap=" << spec.line_gap << '\n';
  if (spec.page_width) out << "page_width=" << spec.page_width << '\n';
  out << "lexicon=";
  for (std::size_t i = 0; i < spec.lexicon.size(); ++i) out << (i ? "," : "") << spec.lexicon[i];
  out << '\n';
}

const std::vector<std::string>& standard_lexicon() {
  static const std::vector<std::string> words = {
      "document", "image",    "retrieval", "system",    "word",     "feature",  "weight",
      "query",    "search",   "index",     "paper",     "text",     "shape",    "pixel",
      "vector",   "match",    "cluster",   "method",    "result",   "value",    "table",
      "figure",   "number",   "precision", "recall",    "average",  "database", "threshold",
      "center",   "gravity",  "density",   "height",    "width",    "ratio",    "upper",
      "lower",    "grid",     "profile",   "bottom",    "top",      "font",     "page",
      "line",     "block",    "noise",     "filter",    "skeleton", "project",  "distance",
      "window"};
  return words;
}

const std::vector<std::string>& confusable_partners() {
  static const std::vector<std::string> words = {
      "documents", "images",  "retrieve", "systems",  "ward",     "features", "weighs",
      "quarry",    "starch",  "indent",   "pager",    "test",     "shade",    "pixels",
      "victor",    "watch",   "bluster",  "methods",  "results",  "valve",    "cable",
      "figures",   "lumber",  "decision", "recoil",   "overage",  "databank", "thresholds",
      "centre",    "cavity",  "destiny",  "heights",  "with",     "radio",    "supper",
      "tower",     "arid",    "profiles", "bottoms",  "tap",      "fond",     "pace",
      "lime",      "black",   "noisy",    "fitter",   "protect",  "distant",  "widow"};
  return words;
}

CorpusSpec standard_corpus_spec() {
  CorpusSpec spec;
  spec.seed = 42;
  spec.pages = 100;
  spec.words_per_page = 12;
  spec.lexicon = standard_lexicon();
  spec.font = Font::A;
  spec.scale = 2;
  return spec;
}

CorpusSpec confusable_corpus_spec() {
  CorpusSpec spec = standard_corpus_spec();
  const auto& extra = confusable_partners();
  spec.lexicon.insert(spec.lexicon.end(), extra.begin(), extra.end());
  return spec;
}

namespace {

// Advance of each glyph (ink width) with one spacing column between glyphs,
// both in unscaled glyph units.
int word_units(std::string_view text, Font font) {
  int units = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    units += glyph(font, text[i]).ink_width() + (i > 0 ? 1 : 0);
  }
  return units;
}

// Draws the word's 16-row cell strip with its top-left at (x0, y0).
void draw_word(BinaryImage& canvas, std::string_view text, Font font, int scale, int x0, int y0) {
  int pen = x0;
  for (char c : text) {
    const Glyph& g = glyph(font, c);
    for (int gy = 0; gy < kGlyphHeight; ++gy) {
      for (int gx = g.left; gx <= g.right; ++gx) {
        if (!g.at(gx, gy)) continue;
        for (int sy = 0; sy < scale; ++sy)
          for (int sx = 0; sx < scale; ++sx)
            canvas.set(pen + (gx - g.left) * scale + sx, y0 + gy * scale + sy);
      }
    }
    pen += (g.ink_width() + 1) * scale;
  }
}

void check_text(std::string_view text) {
  if (text.empty()) throw InvalidArgument("cannot render an empty word");
  for (char c : text) glyph(Font::A, c);
}

}  // namespace

BinaryImage render_word(std::string_view text, Font font, int scale) {
  check_text(text);
  if (scale < 1) throw InvalidArgument("scale must be >= 1");
  BinaryImage strip(word_units(text, font) * scale, kGlyphHeight * scale);
  draw_word(strip, text, font, scale, 0, 0);
  return crop(strip, ink_extent(strip));
}

namespace {

struct Placement {
  std::string text;
  int line;
  int x;
  int width;
};

}  // namespace

RenderedCorpus render_corpus(const CorpusSpec& spec) {
  spec.validate();
  const int scale = spec.scale;
  const int margin = spec.margin_px();
  const int page_w = spec.page_width_px();
  const int usable = page_w - 2 * margin;
  const int cell_h = kGlyphHeight * scale;
  if (usable < 1) throw InvalidArgument("corpus spec: page width leaves no room inside the margins");

  std::mt19937_64 rng(spec.seed);
  RenderedCorpus corpus;
  for (int p = 0; p < spec.pages; ++p) {
    std::vector<Placement> placed;
    int line = 0, pen = 0;
    for (int i = 0; i < spec.words_per_page; ++i) {
      const std::string& text = spec.lexicon[rng() % spec.lexicon.size()];
      const int width = word_units(text, spec.font) * scale;
      if (width > usable) {
        throw InvalidArgument("word '" + text + "' is wider than the page's text area");
      }
      if (pen > 0 && pen + spec.word_gap_px() + width > usable) {
        ++line;
        pen = 0;
      }
      const int x = pen == 0 ? 0 : pen + spec.word_gap_px();
      placed.push_back({text, line, x, width});
      pen = x + width;
    }

    const int lines = line + 1;
    const int page_h = 2 * margin + lines * cell_h + (lines - 1) * spec.line_gap_px();
    RenderedPage page;
    char name[32];
    std::snprintf(name, sizeof name, "page_%03d", p);
    page.doc_id = name;
    page.image = BinaryImage(page_w, page_h);
    int word_id = 0;
    for (const auto& w : placed) {
      const int x0 = margin + w.x;
      const int y0 = margin + w.line * (cell_h + spec.line_gap_px());
      draw_word(page.image, w.text, spec.font, scale, x0, y0);
      const BoundingBox box = ink_extent(page.image, {x0, y0, w.width, cell_h});
      corpus.truth.push_back({{page.doc_id, word_id++}, box, w.text});
    }
    corpus.pages.push_back(std::move(page));
  }
  return corpus;
}

void write_corpus(const RenderedCorpus& corpus, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());
  for (const auto& page : corpus.pages) write_image(page.image, out_dir / (page.doc_id + ".pbm"));
  write_truth(corpus.truth, out_dir / "truth.tsv");
}

std::vector<std::string> sample_queries(const std::vector<std::string>& lexicon, std::size_t count,
                                        std::uint64_t seed) {
  std::vector<std::string> pool = lexicon;
  std::mt19937_64 rng(seed);
  count = std::min(count, pool.size());
  // Partial Fisher-Yates with plain modulo so the draw is platform independent.
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

}  // namespace wordspot
