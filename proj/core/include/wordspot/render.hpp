#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "wordspot/fonts.hpp"
#include "wordspot/image.hpp"
#include "wordspot/store.hpp"

namespace wordspot {

Font parse_font(std::string_view name);
const char* font_name(Font font);

/// Deterministic synthetic corpus description. Spacing fields left at 0
/// take their scale-relative defaults: word and line gaps 8 * scale, margin
/// 16 * scale, page width 320 * scale.
struct CorpusSpec {
  std::uint64_t seed = 42;
  int pages = 1;
  int words_per_page = 12;
  std::vector<std::string> lexicon;
  Font font = Font::A;
  int scale = 2;
  int margin = 0;
  int word_gap = 0;
  int line_gap = 0;
  int page_width = 0;

  int margin_px() const { return margin > 0 ? margin : 16 * scale; }
  int word_gap_px() const { return word_gap > 0 ? word_gap : 8 * scale; }
  int line_gap_px() const { return line_gap > 0 ? line_gap : 8 * scale; }
  int page_width_px() const { return page_width > 0 ? page_width : 320 * scale; }

  void validate() const;
};

/// Flat key=value text, one pair per line, '#' comments. Keys: seed, pages,
/// words_per_page, lexicon (comma separated), lexicon_file (one word per
/// line, relative to `base_dir`), font (A|B), scale, margin, word_gap,
/// line_gap, page_width.
CorpusSpec parse_corpus_spec(std::istream& in, const std::filesystem::path& base_dir = {});
CorpusSpec read_corpus_spec(const std::filesystem::path& path);
void write_corpus_spec(const CorpusSpec& spec, std::ostream& out);

/// The 50-word lexicon of the standard corpus.
const std::vector<std::string>& standard_lexicon();
/// Partner words that differ from a standard word in one or two similar
/// looking letters; appended to the standard lexicon for precision runs.
const std::vector<std::string>& confusable_partners();

/// seed 42, 100 pages, 12 words per page, standard lexicon, font A, scale 2.
CorpusSpec standard_corpus_spec();
/// standard_corpus_spec with the confusable partners added to the lexicon.
CorpusSpec confusable_corpus_spec();

/// One word, glyphs placed with one column (times scale) of spacing and
/// cropped to the ink. Throws for empty text or unsupported characters.
BinaryImage render_word(std::string_view text, Font font, int scale);

struct RenderedPage {
  std::string doc_id;
  BinaryImage image;
};

struct RenderedCorpus {
  std::vector<RenderedPage> pages;
  /// Word boxes are the tight ink boxes of the placed words.
  std::vector<TruthRow> truth;
};

/// Pages are named page_000, page_001, ...; words flow left to right and
/// wrap onto new lines, and the page height fits the lines used.
RenderedCorpus render_corpus(const CorpusSpec& spec);

/// <out_dir>/<doc_id>.pbm (raw P4) per page plus <out_dir>/truth.tsv.
void write_corpus(const RenderedCorpus& corpus, const std::filesystem::path& out_dir);

/// `count` lexicon words drawn without replacement by a generator seeded
/// with `seed` (count is clamped to the lexicon size).
std::vector<std::string> sample_queries(const std::vector<std::string>& lexicon, std::size_t count,
                                        std::uint64_t seed);

}  // namespace wordspot
