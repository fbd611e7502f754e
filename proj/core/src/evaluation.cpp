#include "wordspot/evaluation.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <unordered_map>

#include "wordspot/error.hpp"
#include "wordspot/pipeline.hpp"

namespace wordspot {

PrecisionRecall precision_recall(const std::set<WordRef>& retrieved,
                                 const std::set<WordRef>& relevant) {
  std::size_t hits = 0;
  for (const auto& ref : retrieved) hits += relevant.count(ref);
  PrecisionRecall pr;
  if (retrieved.empty()) {
    pr.precision = relevant.empty() ? 100.0 : 0.0;
  } else {
    pr.precision = 100.0 * static_cast<double>(hits) / static_cast<double>(retrieved.size());
  }
  pr.recall = relevant.empty()
                  ? 100.0
                  : 100.0 * static_cast<double>(hits) / static_cast<double>(relevant.size());
  return pr;
}

std::vector<std::optional<std::string>> label_records(const FeatureDatabase& db,
                                                      const std::vector<TruthRow>& truth,
                                                      double min_iou) {
  std::unordered_map<std::string, std::vector<const TruthRow*>> by_doc;
  for (const auto& t : truth) by_doc[t.ref.doc_id].push_back(&t);

  std::vector<std::optional<std::string>> labels(db.size());
  for (std::size_t i = 0; i < db.size(); ++i) {
    const auto it = by_doc.find(db[i].ref.doc_id);
    if (it == by_doc.end()) continue;
    double best = min_iou;
    for (const TruthRow* t : it->second) {
      const double iou = intersection_over_union(db[i].box, t->box);
      if (iou >= best) {
        best = iou;
        labels[i] = t->text;
      }
    }
  }
  return labels;
}

RelevanceJudgments build_judgments(const FeatureDatabase& db, const std::vector<TruthRow>& truth,
                                   const std::vector<std::string>& query_words) {
  const auto labels = label_records(db, truth);
  RelevanceJudgments j;
  for (const auto& q : query_words) j[q];
  for (std::size_t i = 0; i < db.size(); ++i) {
    if (!labels[i]) continue;
    const auto it = j.find(*labels[i]);
    if (it != j.end()) it->second.insert(db[i].ref);
  }
  return j;
}

PRReport run_experiment(const FeatureDatabase& db, const RelevanceJudgments& judgments,
                        const std::vector<Query>& queries, const WeightVector& w,
                        const MatchConfig& cfg) {
  if (queries.empty()) throw InvalidArgument("run_experiment: no queries, averages undefined");
  PRReport report;
  for (const auto& q : queries) {
    const auto judged = judgments.find(q.text);
    if (judged == judgments.end()) {
      throw InvalidArgument("run_experiment: no relevance judgments for query '" + q.text + "'");
    }
    const FeatureVector features = query_features(q.image);
    const QueryResult result = rank_query(features, db, w, cfg);
    const auto refs = result.retrieved_refs();
    const std::set<WordRef> retrieved(refs.begin(), refs.end());
    const PrecisionRecall pr = precision_recall(retrieved, judged->second);
    report.rows.push_back({q.text, pr.precision, pr.recall, retrieved.size(),
                           judged->second.size(), result.entries.front().distance});
  }
  double sp = 0.0, sr = 0.0;
  for (const auto& row : report.rows) {
    sp += row.precision;
    sr += row.recall;
  }
  report.average_precision = sp / static_cast<double>(report.rows.size());
  report.average_recall = sr / static_cast<double>(report.rows.size());
  return report;
}

void write_report_tsv(const PRReport& report, std::ostream& out) {
  out << "query\tprecision\trecall\tretrieved\trelevant\tbest_distance\n";
  const auto flags = out.flags();
  const auto prec = out.precision();
  out << std::setprecision(9);
  for (const auto& row : report.rows) {
    out << row.query << '\t' << row.precision << '\t' << row.recall << '\t' << row.retrieved
        << '\t' << row.relevant << '\t' << row.best_distance << '\n';
  }
  out << "AVERAGE\t" << report.average_precision << '\t' << report.average_recall << "\t\t\t\n";
  out.flags(flags);
  out.precision(prec);
}

void write_report_summary(const PRReport& report, const std::string& title, std::ostream& out) {
  const auto flags = out.flags();
  const auto prec = out.precision();
  out << "== " << title << " ==\n"
      << "queries:           " << report.rows.size() << '\n'
      << std::fixed << std::setprecision(2)
      << "average precision: " << report.average_precision << " %\n"
      << "average recall:    " << report.average_recall << " %\n";
  out.flags(flags);
  out.precision(prec);
}

}  // namespace wordspot
