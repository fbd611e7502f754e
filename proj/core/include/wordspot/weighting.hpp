#pragma once

#include <cstddef>
#include <vector>

#include "wordspot/database.hpp"
#include "wordspot/features.hpp"

namespace wordspot {

/// Pearson correlations between database columns. Columns whose sample
/// variance is below kMinVariance are inactive: their off-diagonal entries
/// are 0 and they take no part in weighting.
class CorrelationMatrix {
public:
  static constexpr double kMinVariance = 1e-24;

  CorrelationMatrix() = default;
  CorrelationMatrix(std::size_t dim, std::vector<double> r, std::vector<bool> active);

  std::size_t dim() const noexcept { return dim_; }
  double operator()(std::size_t i, std::size_t j) const { return r_[i * dim_ + j]; }
  bool active(std::size_t i) const { return active_[i]; }
  const std::vector<bool>& active_mask() const noexcept { return active_; }
  std::size_t active_count() const;

private:
  std::size_t dim_ = 0;
  std::vector<double> r_;
  std::vector<bool> active_;
};

/// Requires at least 3 records.
CorrelationMatrix correlation_matrix(const FeatureDatabase& db);

/// Multiple correlation of `target` with every other active column, built as
/// 1 - (1 - r_y1^2)(1 - r_y2.1^2)...(1 - r_yk.12..k-1^2) from first-order
/// partial-correlation recursion over the other columns in ascending index
/// order. Throws if the target is inactive or has no active partner.
double multiple_correlation_recursive(const CorrelationMatrix& cm, std::size_t target);

/// Same quantity through R^2 = 1 - 1 / (R^-1)_tt on the active submatrix.
/// A ridge of kRidge * I is added when the condition estimate exceeds
/// kMaxCondition.
double multiple_correlation_matrix_identity(const CorrelationMatrix& cm, std::size_t target);

/// multiple_correlation_matrix_identity for every active column with one
/// factorization; inactive entries are 0.
std::vector<double> multiple_correlations(const CorrelationMatrix& cm);

inline constexpr double kRidge = 1e-8;
inline constexpr double kMaxCondition = 1e12;
inline constexpr double kLambdaFloor = 1e-3;

/// Per-feature weights plus the multiple correlations they came from.
struct WeightVector {
  std::vector<double> lambda;
  std::vector<double> weight;
  std::vector<bool> active;

  std::size_t dim() const noexcept { return weight.size(); }

  /// Throws InvalidArgument unless sizes agree, weights are finite and
  /// non-negative, inactive weights are 0 and active weights sum to 1.
  void validate() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// All features active, lambda 1, weight 1/dim. The unweighted baseline.
WeightVector uniform_weights(std::size_t dim);

/// w_i = (1/lambda_i) / sum_j (1/lambda_j) over active features, lambda
/// floored at kLambdaFloor; inactive features get weight 0.
WeightVector weights_from_lambdas(std::vector<double> lambda, std::vector<bool> active);

/// Requires at least 2 active columns.
WeightVector compute_weights(const CorrelationMatrix& cm);

/// Elementwise v_k * w_k (diagonal weighting of a data object).
FeatureVector apply_weights(const FeatureVector& v, const WeightVector& w);

}  // namespace wordspot
