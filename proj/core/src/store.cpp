#include "wordspot/store.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string_view>

#include "wordspot/error.hpp"

namespace wordspot {

std::string format_real(double v) {
  char buf[40];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
  return {buf, static_cast<std::size_t>(n)};
}

namespace {

class LineReader {
public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }

  std::string require(const char* what) {
    std::string line;
    if (!next(line)) throw ParseError(ParseError::Unit::Line, line_no_ + 1, std::string("missing ") + what);
    return line;
  }

  std::size_t line_no() const noexcept { return line_no_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ParseError::Unit::Line, line_no_, what);
  }

private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

double parse_real(std::string_view s, const LineReader& r, const char* what) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size() || !std::isfinite(v)) {
    r.fail(std::string("non-numeric ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

long long parse_int(std::string_view s, const LineReader& r, const char* what) {
  long long v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
    r.fail(std::string("non-integer ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

// "<key>=<value>" header token.
long long header_value(std::string_view token, std::string_view key, const LineReader& r) {
  if (token.substr(0, key.size()) != key || token.size() <= key.size() || token[key.size()] != '=') {
    r.fail("expected " + std::string(key) + "=<value> in header");
  }
  return parse_int(token.substr(key.size() + 1), r, key.data());
}

std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

void put_reals(std::ostream& out, const std::vector<double>& v) {
  for (double x : v) out << '\t' << format_real(x);
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

template <class F>
auto with_source(const std::filesystem::path& path, F&& f) {
  auto in = open_in(path);
  try {
    return f(in);
  } catch (const ParseError& e) {
    throw e.in(path.string());
  }
}

}  // namespace

void write_db(const FeatureDatabase& db, std::ostream& out) {
  out << "WORDSPOT-DB 1 dim=" << db.dim() << " n=" << db.size() << '\n';
  out << "MIN";
  put_reals(out, db.col_min());
  out << "\nMAX";
  put_reals(out, db.col_max());
  out << '\n';
  for (const auto& rec : db.records()) {
    out << rec.ref.doc_id << '\t' << rec.ref.word_id << '\t' << rec.box.x << '\t' << rec.box.y
        << '\t' << rec.box.w << '\t' << rec.box.h;
    put_reals(out, rec.features);
    out << '\n';
  }
}

void write_db(const FeatureDatabase& db, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_db(db, out);
  if (!out) throw IoError("write failed: " + path.string());
}

FeatureDatabase read_db(std::istream& in) {
  LineReader r(in);
  const std::string header = r.require("header");
  const auto tokens = split_spaces(header);
  if (tokens.size() != 4 || tokens[0] != "WORDSPOT-DB") r.fail("not a WORDSPOT-DB header");
  if (tokens[1] != "1") r.fail("unsupported database version '" + std::string(tokens[1]) + "'");
  const long long dim = header_value(tokens[2], "dim", r);
  const long long n = header_value(tokens[3], "n", r);
  if (dim < 1) r.fail("dim must be positive");
  if (n < 0) r.fail("n must be non-negative");
  const auto d = static_cast<std::size_t>(dim);

  const auto stats_line = [&](const char* tag) {
    const std::string line = r.require(tag);
    const auto f = split_tabs(line);
    if (f[0] != tag) r.fail(std::string("expected ") + tag + " line");
    if (f.size() != d + 1) {
      r.fail(std::string(tag) + " line has " + std::to_string(f.size() - 1) + " values, expected " +
             std::to_string(d));
    }
    std::vector<double> v(d);
    for (std::size_t k = 0; k < d; ++k) v[k] = parse_real(f[k + 1], r, "statistic");
    return std::make_pair(v, r.line_no());
  };
  const auto [mins, min_line] = stats_line("MIN");
  const auto [maxs, max_line] = stats_line("MAX");

  FeatureDatabase db(d);
  std::set<WordRef> seen;
  std::string line;
  for (long long i = 0; i < n; ++i) {
    if (!r.next(line)) {
      throw ParseError(ParseError::Unit::Line, r.line_no() + 1,
                       "expected " + std::to_string(n) + " records, found " + std::to_string(i));
    }
    const auto f = split_tabs(line);
    if (f.size() != d + 6) {
      r.fail("record has " + std::to_string(f.size()) + " fields, expected " + std::to_string(d + 6));
    }
    WordRecord rec;
    rec.ref.doc_id = std::string(f[0]);
    if (rec.ref.doc_id.empty()) r.fail("empty doc_id");
    rec.ref.word_id = static_cast<int>(parse_int(f[1], r, "word_id"));
    if (rec.ref.word_id < 0) r.fail("negative word_id");
    rec.box = {static_cast<int>(parse_int(f[2], r, "x")), static_cast<int>(parse_int(f[3], r, "y")),
               static_cast<int>(parse_int(f[4], r, "w")), static_cast<int>(parse_int(f[5], r, "h"))};
    if (rec.box.w <= 0 || rec.box.h <= 0 || rec.box.x < 0 || rec.box.y < 0) r.fail("invalid box");
    rec.features.resize(d);
    for (std::size_t k = 0; k < d; ++k) rec.features[k] = parse_real(f[k + 6], r, "feature");
    if (!seen.insert(rec.ref).second) r.fail("duplicate word reference");
    db.add(std::move(rec));
  }
  while (r.next(line)) {
    if (!line.empty()) r.fail("unexpected content after " + std::to_string(n) + " records");
  }

  // Stored statistics must be the exact extrema (all zero for an empty db).
  for (std::size_t k = 0; k < d; ++k) {
    if (mins[k] > maxs[k]) {
      throw ParseError(ParseError::Unit::Line, min_line, "MIN exceeds MAX in column " + std::to_string(k));
    }
    if (mins[k] != db.col_min()[k]) {
      throw ParseError(ParseError::Unit::Line, min_line,
                       "MIN of column " + std::to_string(k) + " does not match the records");
    }
    if (maxs[k] != db.col_max()[k]) {
      throw ParseError(ParseError::Unit::Line, max_line,
                       "MAX of column " + std::to_string(k) + " does not match the records");
    }
  }
  return db;
}

FeatureDatabase read_db(const std::filesystem::path& path) {
  return with_source(path, [](std::istream& in) { return read_db(in); });
}

void write_weights(const WeightVector& w, std::ostream& out) {
  out << "WORDSPOT-W 1 dim=" << w.dim() << '\n';
  for (std::size_t i = 0; i < w.dim(); ++i) {
    out << i << '\t' << (w.active[i] ? 1 : 0) << '\t' << format_real(w.lambda[i]) << '\t'
        << format_real(w.weight[i]) << '\n';
  }
}

void write_weights(const WeightVector& w, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_weights(w, out);
  if (!out) throw IoError("write failed: " + path.string());
}

WeightVector read_weights(std::istream& in) {
  LineReader r(in);
  const std::string header = r.require("header");
  const auto tokens = split_spaces(header);
  if (tokens.size() != 3 || tokens[0] != "WORDSPOT-W") r.fail("not a WORDSPOT-W header");
  if (tokens[1] != "1") r.fail("unsupported weights version '" + std::string(tokens[1]) + "'");
  const long long dim = header_value(tokens[2], "dim", r);
  if (dim < 1) r.fail("dim must be positive");
  const std::size_t header_line = r.line_no();

  WeightVector w;
  const auto d = static_cast<std::size_t>(dim);
  w.lambda.resize(d);
  w.weight.resize(d);
  w.active.resize(d);
  std::string line;
  for (std::size_t i = 0; i < d; ++i) {
    if (!r.next(line)) {
      throw ParseError(ParseError::Unit::Line, r.line_no() + 1,
                       "expected " + std::to_string(d) + " feature lines, found " + std::to_string(i));
    }
    const auto f = split_tabs(line);
    if (f.size() != 4) r.fail("weight line has " + std::to_string(f.size()) + " fields, expected 4");
    if (parse_int(f[0], r, "index") != static_cast<long long>(i)) {
      r.fail("expected feature index " + std::to_string(i));
    }
    const long long active = parse_int(f[1], r, "active flag");
    if (active != 0 && active != 1) r.fail("active flag must be 0 or 1");
    w.active[i] = active == 1;
    w.lambda[i] = parse_real(f[2], r, "lambda");
    w.weight[i] = parse_real(f[3], r, "weight");
    if (w.weight[i] < 0.0) r.fail("negative weight");
    if (!w.active[i] && w.weight[i] != 0.0) r.fail("inactive feature with non-zero weight");
    if (w.active[i] && (w.lambda[i] < kLambdaFloor || w.lambda[i] > 1.0)) {
      r.fail("lambda outside [" + format_real(kLambdaFloor) + ", 1]");
    }
  }
  while (r.next(line)) {
    if (!line.empty()) r.fail("unexpected content after weights");
  }
  try {
    w.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(ParseError::Unit::Line, header_line, e.what());
  }
  return w;
}

WeightVector read_weights(const std::filesystem::path& path) {
  return with_source(path, [](std::istream& in) { return read_weights(in); });
}

void write_truth(const std::vector<TruthRow>& rows, std::ostream& out) {
  for (const auto& t : rows) {
    out << t.ref.doc_id << '\t' << t.ref.word_id << '\t' << t.box.x << '\t' << t.box.y << '\t'
        << t.box.w << '\t' << t.box.h << '\t' << t.text << '\n';
  }
}

void write_truth(const std::vector<TruthRow>& rows, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_truth(rows, out);
  if (!out) throw IoError("write failed: " + path.string());
}

std::vector<TruthRow> read_truth(std::istream& in) {
  LineReader r(in);
  std::vector<TruthRow> rows;
  std::string line;
  while (r.next(line)) {
    if (line.empty()) continue;
    const auto f = split_tabs(line);
    if (f.size() != 7) r.fail("truth row has " + std::to_string(f.size()) + " fields, expected 7");
    TruthRow t;
    t.ref.doc_id = std::string(f[0]);
    if (t.ref.doc_id.empty()) r.fail("empty doc_id");
    t.ref.word_id = static_cast<int>(parse_int(f[1], r, "word_id"));
    t.box = {static_cast<int>(parse_int(f[2], r, "x")), static_cast<int>(parse_int(f[3], r, "y")),
             static_cast<int>(parse_int(f[4], r, "w")), static_cast<int>(parse_int(f[5], r, "h"))};
    t.text = std::string(f[6]);
    if (t.text.empty()) r.fail("empty word text");
    rows.push_back(std::move(t));
  }
  return rows;
}

std::vector<TruthRow> read_truth(const std::filesystem::path& path) {
  return with_source(path, [](std::istream& in) { return read_truth(in); });
}

}  // namespace wordspot
