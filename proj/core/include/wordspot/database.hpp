#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "wordspot/features.hpp"
#include "wordspot/image.hpp"

namespace wordspot {

/// Identity of an indexed word: page document id plus its position in the
/// page's reading order.
struct WordRef {
  std::string doc_id;
  int word_id = 0;

  friend auto operator<=>(const WordRef&, const WordRef&) = default;
};

struct WordRecord {
  WordRef ref;
  BoundingBox box;
  FeatureVector features;

  friend bool operator==(const WordRecord&, const WordRecord&) = default;
};

/// The indexed corpus plus exact per-column extrema. Statistics are derived
/// from the records; call refresh_stats() after mutating `records`.
class FeatureDatabase {
public:
  explicit FeatureDatabase(std::size_t dim = kFeatureDim) : dim_(dim), col_min_(dim, 0.0), col_max_(dim, 0.0) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }

  const std::vector<WordRecord>& records() const noexcept { return records_; }
  const WordRecord& operator[](std::size_t i) const { return records_[i]; }

  const std::vector<double>& col_min() const noexcept { return col_min_; }
  const std::vector<double>& col_max() const noexcept { return col_max_; }

  /// Appends a record and widens the column statistics. Throws on a feature
  /// length mismatch or an invalid doc id.
  void add(WordRecord record);

  /// Replaces all records and recomputes statistics.
  void assign(std::vector<WordRecord> records);

  friend bool operator==(const FeatureDatabase&, const FeatureDatabase&) = default;

private:
  void check(const WordRecord& r) const;

  std::size_t dim_;
  std::vector<WordRecord> records_;
  std::vector<double> col_min_;
  std::vector<double> col_max_;
};

/// Builds a database from raw vectors; refs are ("row", i).
FeatureDatabase database_from_rows(const std::vector<std::vector<double>>& rows);

}  // namespace wordspot
