#include "wordspot/features.hpp"

#include <algorithm>
#include <cmath>

#include "wordspot/dct.hpp"
#include "wordspot/error.hpp"

namespace wordspot {

namespace {

void require_nonempty(const BinaryImage& word, const char* what) {
  if (word.empty() || word.width() < 1 || word.height() < 1) {
    throw InvalidArgument(std::string(what) + ": zero-area word image");
  }
}

std::vector<double> smooth5(const std::vector<double>& x) {
  const auto n = static_cast<long>(x.size());
  std::vector<double> out(x.size());
  for (long i = 0; i < n; ++i) {
    double acc = 0.0;
    for (long d = -2; d <= 2; ++d) acc += x[static_cast<std::size_t>(std::clamp(i + d, 0L, n - 1))];
    out[static_cast<std::size_t>(i)] = acc / 5.0;
  }
  return out;
}

std::vector<double> resample_linear(const std::vector<double>& x, std::size_t len) {
  std::vector<double> out(len);
  if (x.size() == 1) {
    std::fill(out.begin(), out.end(), x[0]);
    return out;
  }
  const double step = static_cast<double>(x.size() - 1) / static_cast<double>(len - 1);
  for (std::size_t i = 0; i < len; ++i) {
    const double pos = step * static_cast<double>(i);
    const auto lo = std::min(static_cast<std::size_t>(pos), x.size() - 2);
    const double frac = pos - static_cast<double>(lo);
    out[i] = x[lo] + (x[lo + 1] - x[lo]) * frac;
  }
  return out;
}

}  // namespace

double density(const BinaryImage& word) {
  require_nonempty(word, "density");
  return 100.0 * static_cast<double>(ink_count(word)) /
         (static_cast<double>(word.width()) * static_cast<double>(word.height()));
}

double center_of_gravity(const BinaryImage& word) {
  require_nonempty(word, "center_of_gravity");
  const double m00 = geometric_moment(word, 0, 0);
  if (m00 == 0.0) throw InvalidArgument("center_of_gravity: word has no ink");
  const double cx = geometric_moment(word, 1, 0) / m00;
  const double cy = geometric_moment(word, 0, 1) / m00;
  return std::sqrt(cx * cx + cy * cy);
}

ProfileSignal top_profile(const BinaryImage& word) {
  ProfileSignal p{std::vector<double>(static_cast<std::size_t>(word.width()), 0.0)};
  for (int x = 0; x < word.width(); ++x) {
    for (int y = 0; y < word.height(); ++y) {
      if (word.at(x, y)) {
        p.samples[x] = word.height() - y;
        break;
      }
    }
  }
  return p;
}

ProfileSignal bottom_profile(const BinaryImage& word) {
  ProfileSignal p{std::vector<double>(static_cast<std::size_t>(word.width()), 0.0)};
  for (int x = 0; x < word.width(); ++x) {
    for (int y = word.height() - 1; y >= 0; --y) {
      if (word.at(x, y)) {
        p.samples[x] = y + 1;
        break;
      }
    }
  }
  return p;
}

ProfileSignal vertical_profile(const BinaryImage& word) {
  const auto cols = vertical_projection(word);
  return {std::vector<double>(cols.begin(), cols.end())};
}

std::vector<double> profile_dct_features(const ProfileSignal& profile, int word_height,
                                         std::size_t n_coeffs) {
  if (profile.samples.empty()) throw InvalidArgument("profile_dct_features: empty profile");
  if (word_height < 1) throw InvalidArgument("profile_dct_features: word height must be >= 1");
  std::vector<double> x = profile.samples;
  for (double& v : x) v /= word_height;
  x = smooth5(x);
  x = resample_linear(x, kProfileResampleLength);
  return dct2(x, n_coeffs);
}

std::array<bool, 10> grid_features(const BinaryImage& word, GridPart part) {
  if (word.empty() || word.height() < 2 || word.width() < 1) {
    throw InvalidArgument("grid_features: word must be at least 1 wide and 2 high");
  }
  const int split = word.height() / 2;
  const int y0 = part == GridPart::Upper ? 0 : split;
  const int y1 = part == GridPart::Upper ? split : word.height();
  std::array<bool, 10> bits{};
  for (int i = 0; i < 10; ++i) {
    const int x0 = i * word.width() / 10;
    const int x1 = (i + 1) * word.width() / 10;
    const long long area = static_cast<long long>(x1 - x0) * (y1 - y0);
    if (area == 0) continue;
    const long long ink = ink_count(word, {x0, y0, x1 - x0, y1 - y0});
    bits[i] = static_cast<double>(ink) / static_cast<double>(area) >= 0.05;
  }
  return bits;
}

FeatureVector extract_features(const BinaryImage& word) {
  require_nonempty(word, "extract_features");
  FeatureVector v(kFeatureDim, 0.0);
  v[layout::kAspectRatio] = static_cast<double>(word.width()) / word.height();
  v[layout::kDensity] = density(word);
  v[layout::kCenterOfGravity] = center_of_gravity(word);

  const auto put = [&v](std::size_t offset, const std::vector<double>& xs) {
    std::copy(xs.begin(), xs.end(), v.begin() + static_cast<std::ptrdiff_t>(offset));
  };
  const int h = word.height();
  put(layout::kVerticalDct, profile_dct_features(vertical_profile(word), h, layout::kVerticalDctCount));
  put(layout::kTopDct, profile_dct_features(top_profile(word), h, layout::kTopDctCount));
  put(layout::kBottomDct, profile_dct_features(bottom_profile(word), h, layout::kBottomDctCount));

  const auto upper = grid_features(word, GridPart::Upper);
  const auto lower = grid_features(word, GridPart::Lower);
  for (std::size_t i = 0; i < 10; ++i) {
    v[layout::kUpperGrid + i] = upper[i] ? 1.0 : 0.0;
    v[layout::kLowerGrid + i] = lower[i] ? 1.0 : 0.0;
  }
  return v;
}

}  // namespace wordspot
