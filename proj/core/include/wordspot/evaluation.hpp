#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wordspot/database.hpp"
#include "wordspot/image.hpp"
#include "wordspot/matching.hpp"
#include "wordspot/store.hpp"
#include "wordspot/weighting.hpp"

namespace wordspot {

struct PrecisionRecall {
  double precision = 0.0;  // percent
  double recall = 0.0;     // percent
};

/// Percentages over set semantics. Empty retrieved set: precision 100 when
/// nothing is relevant, otherwise 0. Empty relevant set: recall 100.
PrecisionRecall precision_recall(const std::set<WordRef>& retrieved,
                                 const std::set<WordRef>& relevant);

/// Query word -> references whose ground-truth text equals it exactly.
using RelevanceJudgments = std::map<std::string, std::set<WordRef>>;

/// Ground-truth text of each database record: the truth row of the same
/// document with the largest box overlap (IoU >= min_iou), if any.
std::vector<std::optional<std::string>> label_records(const FeatureDatabase& db,
                                                      const std::vector<TruthRow>& truth,
                                                      double min_iou = 0.5);

RelevanceJudgments build_judgments(const FeatureDatabase& db, const std::vector<TruthRow>& truth,
                                   const std::vector<std::string>& query_words);

/// A query: the word text (for relevance lookup) and its rendered, not yet
/// preprocessed image.
struct Query {
  std::string text;
  BinaryImage image;
};

struct QueryOutcome {
  std::string query;
  double precision = 0.0;
  double recall = 0.0;
  std::size_t retrieved = 0;
  std::size_t relevant = 0;
  /// Distance of the best match (rank 1).
  double best_distance = 0.0;
};

struct PRReport {
  std::vector<QueryOutcome> rows;
  double average_precision = 0.0;
  double average_recall = 0.0;
};

/// Extracts features from every query image, ranks it, cuts the retrieved
/// set and scores it. Throws when a query has no judgments entry or the
/// query list is empty.
PRReport run_experiment(const FeatureDatabase& db, const RelevanceJudgments& judgments,
                        const std::vector<Query>& queries, const WeightVector& w,
                        const MatchConfig& cfg);

void write_report_tsv(const PRReport& report, std::ostream& out);
void write_report_summary(const PRReport& report, const std::string& title, std::ostream& out);

}  // namespace wordspot
