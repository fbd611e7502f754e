#include "wordspot/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <tuple>

#include "wordspot/error.hpp"

namespace wordspot {

namespace {

constexpr std::size_t kMaxIterations = 100;

std::vector<FeatureVector> working_points(const FeatureDatabase& db, const MatchConfig& cfg) {
  std::vector<FeatureVector> pts;
  pts.reserve(db.size());
  for (const auto& rec : db.records()) {
    pts.push_back(cfg.normalize ? normalize_features(rec.features, db) : rec.features);
  }
  return pts;
}

WeightVector resolve_weights(const FeatureDatabase& db, const std::optional<WeightVector>& w) {
  if (!w) return uniform_weights(db.dim());
  if (w->dim() != db.dim()) throw InvalidArgument("cluster weights dimension differs from database");
  return *w;
}

std::pair<std::size_t, double> nearest(const FeatureVector& p, const std::vector<FeatureVector>& cs,
                                       const WeightVector& w, const MatchConfig& cfg) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < cs.size(); ++j) {
    const double d = weighted_distance(p, cs[j], w, cfg);
    if (d < best_d) {
      best_d = d;
      best = j;
    }
  }
  return {best, best_d};
}

std::vector<FeatureVector> means(const std::vector<FeatureVector>& pts,
                                 const std::vector<std::size_t>& assignment, std::size_t k,
                                 std::size_t dim) {
  std::vector<FeatureVector> cs(k, FeatureVector(dim, 0.0));
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto& c = cs[assignment[i]];
    for (std::size_t d = 0; d < dim; ++d) c[d] += pts[i][d];
    ++counts[assignment[i]];
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (counts[j] == 0) continue;
    for (double& v : cs[j]) v /= static_cast<double>(counts[j]);
  }
  return cs;
}

}  // namespace

ClusterModel ik_means(const FeatureDatabase& db, double threshold,
                      const std::optional<WeightVector>& w_opt, const MatchConfig& cfg) {
  if (db.empty()) throw InvalidArgument("ik_means: empty database");
  if (!(threshold > 0.0)) throw InvalidArgument("ik_means: threshold must be positive");
  cfg.validate();
  const WeightVector w = resolve_weights(db, w_opt);
  const auto pts = working_points(db, cfg);
  const std::size_t n = pts.size(), dim = db.dim();

  ClusterModel m;
  m.threshold = threshold;
  m.assignment.assign(n, 0);
  m.founded.assign(n, false);
  m.seed_distance.assign(n, 0.0);

  // Seeding.
  std::vector<FeatureVector> cs{pts[0]};
  std::vector<std::size_t> counts{1};
  m.founded[0] = true;
  for (std::size_t i = 1; i < n; ++i) {
    const auto [j, d] = nearest(pts[i], cs, w, cfg);
    if (d <= threshold) {
      m.assignment[i] = j;
      m.seed_distance[i] = d;
      const double cnt = static_cast<double>(++counts[j]);
      for (std::size_t k = 0; k < dim; ++k) cs[j][k] += (pts[i][k] - cs[j][k]) / cnt;
    } else {
      m.assignment[i] = cs.size();
      m.founded[i] = true;
      cs.push_back(pts[i]);
      counts.push_back(1);
    }
  }
  m.k = cs.size();
  m.seed_clusters = m.k;
  cs = means(pts, m.assignment, m.k, dim);

  // Lloyd refinement.
  for (m.iterations = 0; m.iterations < kMaxIterations; ++m.iterations) {
    std::vector<std::size_t> next(n);
    std::vector<double> dist(n);
    std::vector<std::size_t> size(m.k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::tie(next[i], dist[i]) = nearest(pts[i], cs, w, cfg);
      ++size[next[i]];
    }
    for (std::size_t j = 0; j < m.k; ++j) {
      if (size[j] != 0) continue;
      std::size_t far = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (size[next[i]] < 2) continue;
        if (far == n || dist[i] > dist[far]) far = i;
      }
      if (far == n) break;
      --size[next[far]];
      next[far] = j;
      dist[far] = 0.0;
      size[j] = 1;
    }
    const bool changed = next != m.assignment;
    auto updated = means(pts, next, m.k, dim);
    double shift = 0.0;
    for (std::size_t j = 0; j < m.k; ++j)
      for (std::size_t d = 0; d < dim; ++d) shift = std::max(shift, std::abs(updated[j][d] - cs[j][d]));
    m.assignment = std::move(next);
    cs = std::move(updated);
    if (!changed && shift <= 1e-9) break;
  }
  m.centroids = std::move(cs);
  return m;
}

ClusterQuality cluster_quality(const ClusterModel& model, const FeatureDatabase& db,
                               const std::optional<WeightVector>& w_opt, const MatchConfig& cfg) {
  if (model.assignment.size() != db.size()) throw InvalidArgument("cluster model does not fit database");
  const WeightVector w = resolve_weights(db, w_opt);
  const auto pts = working_points(db, cfg);

  ClusterQuality q;
  double intra = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    intra += weighted_distance(pts[i], model.centroids[model.assignment[i]], w, cfg);
  }
  q.mean_intra = pts.empty() ? 0.0 : intra / static_cast<double>(pts.size());

  q.min_inter = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < model.k; ++a)
    for (std::size_t b = a + 1; b < model.k; ++b)
      q.min_inter = std::min(q.min_inter, weighted_distance(model.centroids[a], model.centroids[b], w, cfg));

  if (model.k <= 1) {
    q.ratio = 0.0;
  } else {
    q.ratio = q.min_inter > 0.0 ? q.mean_intra / q.min_inter : std::numeric_limits<double>::infinity();
  }
  return q;
}

void write_cluster_tsv(const ClusterModel& model, const FeatureDatabase& db, std::ostream& out) {
  out << "doc_id\tword_id\tcluster\n";
  for (std::size_t i = 0; i < db.size(); ++i) {
    out << db[i].ref.doc_id << '\t' << db[i].ref.word_id << '\t' << model.assignment[i] << '\n';
  }
}

}  // namespace wordspot
