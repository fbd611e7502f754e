#include "wordspot/dct.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace wordspot {

namespace {

// cos(pi * m / (2N)) for m in [0, 4N). The argument (2n + 1) k is reduced
// modulo 4N before lookup so every basis value comes from one table entry.
class CosineTable {
public:
  explicit CosineTable(std::size_t n) : n_(n), table_(4 * n) {
    for (std::size_t m = 0; m < table_.size(); ++m) {
      table_[m] = std::cos(std::numbers::pi * static_cast<double>(m) / (2.0 * static_cast<double>(n)));
    }
  }

  double basis(std::size_t sample, std::size_t k) const {
    return table_[((2 * sample + 1) * k) % (4 * n_)];
  }

private:
  std::size_t n_;
  std::vector<double> table_;
};

const CosineTable& table_for(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<CosineTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<CosineTable>(n);
  return *slot;
}

}  // namespace

std::vector<double> dct2(std::span<const double> signal, std::size_t n_coeffs) {
  const std::size_t n = signal.size();
  if (n == 0) return {};
  n_coeffs = std::min(n_coeffs, n);
  const CosineTable& cos_table = table_for(n);
  const double s0 = std::sqrt(1.0 / static_cast<double>(n));
  const double sk = std::sqrt(2.0 / static_cast<double>(n));

  std::vector<double> out(n_coeffs);
  for (std::size_t k = 0; k < n_coeffs; ++k) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += signal[i] * cos_table.basis(i, k);
    out[k] = (k == 0 ? s0 : sk) * acc;
  }
  return out;
}

}  // namespace wordspot
