#include "wordspot/database.hpp"

#include <algorithm>

#include "wordspot/error.hpp"

namespace wordspot {

void FeatureDatabase::check(const WordRecord& r) const {
  if (r.features.size() != dim_) {
    throw InvalidArgument("record has " + std::to_string(r.features.size()) +
                          " features, database dimension is " + std::to_string(dim_));
  }
  if (r.ref.doc_id.empty() ||
      r.ref.doc_id.find_first_of("\t\n\r") != std::string::npos) {
    throw InvalidArgument("doc_id must be non-empty and free of tabs and newlines");
  }
  if (r.ref.word_id < 0) throw InvalidArgument("word_id must be non-negative");
}

void FeatureDatabase::add(WordRecord record) {
  check(record);
  if (records_.empty()) {
    col_min_ = record.features;
    col_max_ = record.features;
  } else {
    for (std::size_t k = 0; k < dim_; ++k) {
      col_min_[k] = std::min(col_min_[k], record.features[k]);
      col_max_[k] = std::max(col_max_[k], record.features[k]);
    }
  }
  records_.push_back(std::move(record));
}

void FeatureDatabase::assign(std::vector<WordRecord> records) {
  records_.clear();
  col_min_.assign(dim_, 0.0);
  col_max_.assign(dim_, 0.0);
  for (auto& r : records) add(std::move(r));
}

FeatureDatabase database_from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw InvalidArgument("database_from_rows: no rows");
  FeatureDatabase db(rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    db.add({{"row", static_cast<int>(i)}, {0, 0, 1, 1}, rows[i]});
  }
  return db;
}

}  // namespace wordspot
