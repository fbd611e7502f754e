#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "wordspot/database.hpp"
#include "wordspot/matching.hpp"
#include "wordspot/weighting.hpp"

namespace wordspot {

struct ClusterModel {
  std::size_t k = 0;
  /// In the space distances were measured in: min-max normalized columns
  /// when MatchConfig::normalize was set, raw features otherwise.
  std::vector<FeatureVector> centroids;
  std::vector<std::size_t> assignment;
  double threshold = 0.0;

  /// Seeding pass bookkeeping: whether record i founded a cluster, and
  /// otherwise its distance to the centroid it joined at that moment.
  std::vector<bool> founded;
  std::vector<double> seed_distance;
  std::size_t seed_clusters = 0;
  std::size_t iterations = 0;
};

/// Threshold-seeded k-means. Records are visited in database order; each
/// joins the nearest running-mean centroid within `threshold` or founds a
/// new cluster. Lloyd refinement follows (at most 100 iterations, empty
/// clusters re-seeded with the farthest record). Distances use `w`, or
/// uniform weights when absent.
ClusterModel ik_means(const FeatureDatabase& db, double threshold,
                      const std::optional<WeightVector>& w, const MatchConfig& cfg);

struct ClusterQuality {
  double mean_intra = 0.0;
  /// +infinity when k == 1.
  double min_inter = 0.0;
  /// mean_intra / min_inter; 0 when k == 1.
  double ratio = 0.0;
};

ClusterQuality cluster_quality(const ClusterModel& model, const FeatureDatabase& db,
                               const std::optional<WeightVector>& w, const MatchConfig& cfg);

void write_cluster_tsv(const ClusterModel& model, const FeatureDatabase& db, std::ostream& out);

}  // namespace wordspot
