#include "wordspot/matching.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wordspot/error.hpp"

namespace wordspot {

void MatchConfig::validate() const {
  if (!(p >= 1.0) || !std::isfinite(p)) throw InvalidArgument("Minkowski exponent must be >= 1");
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw InvalidArgument("threshold must lie in [0, 1], got " + std::to_string(threshold));
  }
}

double weighted_distance(const FeatureVector& a, const FeatureVector& b, const WeightVector& w,
                         const MatchConfig& cfg) {
  if (a.size() != b.size() || a.size() != w.dim()) {
    throw InvalidArgument("weighted_distance: dimension mismatch (" + std::to_string(a.size()) +
                          ", " + std::to_string(b.size()) + ", weights " +
                          std::to_string(w.dim()) + ")");
  }
  double acc = 0.0;
  if (cfg.p == 1.0) {
    for (std::size_t k = 0; k < a.size(); ++k) acc += w.weight[k] * std::abs(a[k] - b[k]);
    return acc;
  }
  for (std::size_t k = 0; k < a.size(); ++k) acc += w.weight[k] * std::pow(std::abs(a[k] - b[k]), cfg.p);
  return std::pow(acc, 1.0 / cfg.p);
}

FeatureVector normalize_features(const FeatureVector& v, const FeatureDatabase& db) {
  if (v.size() != db.dim()) throw InvalidArgument("normalize_features: dimension mismatch");
  FeatureVector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double range = db.col_max()[k] - db.col_min()[k];
    out[k] = range > 0.0 ? std::clamp((v[k] - db.col_min()[k]) / range, 0.0, 1.0) : 0.0;
  }
  return out;
}

std::vector<WordRef> QueryResult::retrieved_refs() const {
  std::vector<WordRef> refs;
  refs.reserve(retrieved);
  for (std::size_t i = 0; i < retrieved; ++i) refs.push_back(entries[i].ref);
  return refs;
}

QueryResult rank_query(const FeatureVector& query, const FeatureDatabase& db,
                       const WeightVector& w, const MatchConfig& cfg) {
  cfg.validate();
  if (db.empty()) throw InvalidArgument("rank_query: empty database");
  if (w.dim() != db.dim() || query.size() != db.dim()) {
    throw InvalidArgument("rank_query: query, weights and database dimensions differ");
  }

  const FeatureVector q = cfg.normalize ? normalize_features(query, db) : query;
  QueryResult result;
  result.entries.reserve(db.size());
  for (const auto& rec : db.records()) {
    const double d = cfg.normalize ? weighted_distance(normalize_features(rec.features, db), q, w, cfg)
                                   : weighted_distance(rec.features, q, w, cfg);
    result.entries.push_back({rec.ref, d});
  }
  std::sort(result.entries.begin(), result.entries.end(),
            [](const RankedWord& a, const RankedWord& b) {
              if (a.distance != b.distance) return a.distance < b.distance;
              return a.ref < b.ref;
            });

  std::size_t n = 0;
  while (n < result.entries.size() && result.entries[n].distance <= cfg.threshold) ++n;
  if (cfg.top_k) n = std::min(n, *cfg.top_k);
  result.retrieved = n;
  return result;
}

}  // namespace wordspot
