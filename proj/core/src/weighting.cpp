#include "wordspot/weighting.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "wordspot/error.hpp"

namespace wordspot {

CorrelationMatrix::CorrelationMatrix(std::size_t dim, std::vector<double> r,
                                     std::vector<bool> active)
    : dim_(dim), r_(std::move(r)), active_(std::move(active)) {
  if (r_.size() != dim * dim || active_.size() != dim) {
    throw InvalidArgument("correlation matrix storage does not match its dimension");
  }
}

std::size_t CorrelationMatrix::active_count() const {
  return static_cast<std::size_t>(std::count(active_.begin(), active_.end(), true));
}

CorrelationMatrix correlation_matrix(const FeatureDatabase& db) {
  const std::size_t n = db.size();
  if (n < 3) {
    throw InvalidArgument("correlation_matrix needs at least 3 records, got " + std::to_string(n));
  }
  const std::size_t d = db.dim();

  std::vector<double> mean(d, 0.0);
  for (const auto& rec : db.records())
    for (std::size_t k = 0; k < d; ++k) mean[k] += rec.features[k];
  for (double& m : mean) m /= static_cast<double>(n);

  // Centered cross products, row-major d x d.
  std::vector<double> cross(d * d, 0.0);
  std::vector<double> centered(d);
  for (const auto& rec : db.records()) {
    for (std::size_t k = 0; k < d; ++k) centered[k] = rec.features[k] - mean[k];
    for (std::size_t i = 0; i < d; ++i) {
      const double ci = centered[i];
      if (ci == 0.0) continue;
      for (std::size_t j = i; j < d; ++j) cross[i * d + j] += ci * centered[j];
    }
  }

  std::vector<bool> active(d);
  for (std::size_t i = 0; i < d; ++i) {
    active[i] = cross[i * d + i] / static_cast<double>(n - 1) >= CorrelationMatrix::kMinVariance;
  }

  std::vector<double> r(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    r[i * d + i] = 1.0;
    if (!active[i]) continue;
    for (std::size_t j = i + 1; j < d; ++j) {
      if (!active[j]) continue;
      const double c = cross[i * d + j] / std::sqrt(cross[i * d + i] * cross[j * d + j]);
      r[i * d + j] = r[j * d + i] = std::clamp(c, -1.0, 1.0);
    }
  }
  return {d, std::move(r), std::move(active)};
}

namespace {

constexpr double kMinResidual = 1e-12;

std::vector<std::size_t> active_indices(const CorrelationMatrix& cm) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < cm.dim(); ++i)
    if (cm.active(i)) idx.push_back(i);
  return idx;
}

double lambda_from_r2(double r2) { return std::sqrt(std::clamp(r2, 0.0, 1.0)); }

}  // namespace

double multiple_correlation_recursive(const CorrelationMatrix& cm, std::size_t target) {
  if (target >= cm.dim() || !cm.active(target)) {
    throw InvalidArgument("multiple correlation target " + std::to_string(target) +
                          " is not an active feature");
  }
  // vars[0] is the target, the rest are the conditioning columns in order.
  std::vector<std::size_t> vars{target};
  for (std::size_t i : active_indices(cm))
    if (i != target) vars.push_back(i);
  const std::size_t m = vars.size();
  if (m < 2) throw InvalidArgument("multiple correlation needs at least one other active feature");

  // p holds partial correlations given the columns conditioned on so far.
  std::vector<double> p(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) p[a * m + b] = cm(vars[a], vars[b]);

  double unexplained = 1.0;
  for (std::size_t c = 1; c < m; ++c) {
    const double ryc = p[c];  // p[0 * m + c]
    unexplained *= 1.0 - ryc * ryc;
    if (c + 1 == m) break;

    // Condition every remaining pair (target and columns after c) on column c.
    for (std::size_t a = 0; a < m; ++a) {
      if (a != 0 && a <= c) continue;
      const double rac = p[a * m + c];
      const double sa = std::max(1.0 - rac * rac, kMinResidual);
      for (std::size_t b = c + 1; b < m; ++b) {
        if (b == a) continue;
        const double rbc = p[b * m + c];
        const double sb = std::max(1.0 - rbc * rbc, kMinResidual);
        const double partial = (p[a * m + b] - rac * rbc) / std::sqrt(sa * sb);
        p[a * m + b] = std::clamp(partial, -1.0, 1.0);
      }
    }
    // Keep the matrix symmetric for the rows read next iteration.
    for (std::size_t a = c + 1; a < m; ++a)
      for (std::size_t b = c + 1; b < m; ++b)
        if (a != b) p[b * m + a] = p[a * m + b];
    for (std::size_t b = c + 1; b < m; ++b) p[b * m] = p[b];
  }
  return lambda_from_r2(1.0 - unexplained);
}

namespace {

// Diagonal of the inverse of the active submatrix.
Eigen::VectorXd inverse_diagonal(const CorrelationMatrix& cm, const std::vector<std::size_t>& idx) {
  const auto a = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd s(a, a);
  for (Eigen::Index i = 0; i < a; ++i)
    for (Eigen::Index j = 0; j < a; ++j) s(i, j) = cm(idx[i], idx[j]);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s, Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  const double condition = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  if (condition > kMaxCondition) s.diagonal().array() += kRidge;

  const Eigen::LDLT<Eigen::MatrixXd> ldlt(s);
  const Eigen::MatrixXd inv = ldlt.solve(Eigen::MatrixXd::Identity(a, a));
  return inv.diagonal();
}

}  // namespace

double multiple_correlation_matrix_identity(const CorrelationMatrix& cm, std::size_t target) {
  if (target >= cm.dim() || !cm.active(target)) {
    throw InvalidArgument("multiple correlation target " + std::to_string(target) +
                          " is not an active feature");
  }
  const auto idx = active_indices(cm);
  const auto pos = std::find(idx.begin(), idx.end(), target) - idx.begin();
  const Eigen::VectorXd diag = inverse_diagonal(cm, idx);
  return lambda_from_r2(1.0 - 1.0 / diag(pos));
}

std::vector<double> multiple_correlations(const CorrelationMatrix& cm) {
  std::vector<double> lambda(cm.dim(), 0.0);
  const auto idx = active_indices(cm);
  if (idx.empty()) return lambda;
  const Eigen::VectorXd diag = inverse_diagonal(cm, idx);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    lambda[idx[i]] = lambda_from_r2(1.0 - 1.0 / diag(static_cast<Eigen::Index>(i)));
  }
  return lambda;
}

void WeightVector::validate() const {
  const std::size_t d = weight.size();
  if (lambda.size() != d || active.size() != d) {
    throw InvalidArgument("weight vector fields have inconsistent lengths");
  }
  if (d == 0) throw InvalidArgument("weight vector is empty");
  double sum = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    if (!std::isfinite(weight[i]) || weight[i] < 0.0) {
      throw InvalidArgument("weight " + std::to_string(i) + " is negative or not finite");
    }
    if (!active[i] && weight[i] != 0.0) {
      throw InvalidArgument("inactive feature " + std::to_string(i) + " has non-zero weight");
    }
    if (active[i]) sum += weight[i];
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw InvalidArgument("active weights sum to " + std::to_string(sum) + ", expected 1");
  }
}

WeightVector uniform_weights(std::size_t dim) {
  if (dim == 0) throw InvalidArgument("uniform_weights: zero dimension");
  return {std::vector<double>(dim, 1.0), std::vector<double>(dim, 1.0 / static_cast<double>(dim)),
          std::vector<bool>(dim, true)};
}

WeightVector weights_from_lambdas(std::vector<double> lambda, std::vector<bool> active) {
  if (lambda.size() != active.size()) throw InvalidArgument("lambda/active length mismatch");
  const std::size_t d = lambda.size();
  double total = 0.0;
  std::size_t n_active = 0;
  for (std::size_t i = 0; i < d; ++i) {
    if (!active[i]) {
      lambda[i] = 0.0;
      continue;
    }
    lambda[i] = std::clamp(std::abs(lambda[i]), kLambdaFloor, 1.0);
    total += 1.0 / lambda[i];
    ++n_active;
  }
  if (n_active < 2) throw InvalidArgument("weighting needs at least 2 active features");

  std::vector<double> weight(d, 0.0);
  for (std::size_t i = 0; i < d; ++i)
    if (active[i]) weight[i] = (1.0 / lambda[i]) / total;
  return {std::move(lambda), std::move(weight), std::move(active)};
}

WeightVector compute_weights(const CorrelationMatrix& cm) {
  if (cm.active_count() < 2) throw InvalidArgument("weighting needs at least 2 active features");
  return weights_from_lambdas(multiple_correlations(cm), cm.active_mask());
}

FeatureVector apply_weights(const FeatureVector& v, const WeightVector& w) {
  if (v.size() != w.dim()) {
    throw InvalidArgument("apply_weights: vector has " + std::to_string(v.size()) +
                          " entries, weights have " + std::to_string(w.dim()));
  }
  FeatureVector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k] * w.weight[k];
  return out;
}

}  // namespace wordspot
