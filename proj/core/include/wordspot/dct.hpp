#pragma once

#include <span>
#include <vector>

namespace wordspot {

/// Orthonormal DCT-II, first `n_coeffs` coefficients:
///   X[k] = s(k) * sum_n x[n] cos(pi (n + 1/2) k / N),
///   s(0) = sqrt(1/N), s(k > 0) = sqrt(2/N).
/// `n_coeffs` is clamped to the signal length.
std::vector<double> dct2(std::span<const double> signal, std::size_t n_coeffs);

/// Full-length transform.
inline std::vector<double> dct2(std::span<const double> signal) {
  return dct2(signal, signal.size());
}

}  // namespace wordspot
