#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wordspot/database.hpp"
#include "wordspot/features.hpp"
#include "wordspot/weighting.hpp"

namespace wordspot {

struct MatchConfig {
  /// Minkowski exponent.
  double p = 1.0;
  /// Min-max normalize every column with the database statistics before
  /// measuring distances. Off reproduces the raw-feature pipeline.
  bool normalize = true;
  /// Retrieval cutoff on the distance scale, in [0, 1].
  double threshold = 0.05;
  std::optional<std::size_t> top_k;

  void validate() const;
};

/// (sum_k w_k |a_k - b_k|^p)^(1/p). With p = 1 this is the weighted L1 sum.
double weighted_distance(const FeatureVector& a, const FeatureVector& b, const WeightVector& w,
                         const MatchConfig& cfg = {});

/// Maps each column to [0, 1] with the database extrema, clamping values
/// outside the indexed range. Constant columns map to 0.
FeatureVector normalize_features(const FeatureVector& v, const FeatureDatabase& db);

struct RankedWord {
  WordRef ref;
  double distance = 0.0;
};

struct QueryResult {
  /// Whole database, ascending by distance, ties by (doc_id, word_id).
  std::vector<RankedWord> entries;
  /// The retrieved set is entries[0, retrieved).
  std::size_t retrieved = 0;

  std::vector<WordRef> retrieved_refs() const;
};

QueryResult rank_query(const FeatureVector& query, const FeatureDatabase& db,
                       const WeightVector& w, const MatchConfig& cfg = {});

}  // namespace wordspot
