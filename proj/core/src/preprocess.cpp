#include "wordspot/preprocess.hpp"

#include <utility>
#include <vector>

#include "wordspot/error.hpp"

namespace wordspot {

Histogram intensity_histogram(const GrayImage& img) {
  Histogram h{};
  for (std::uint8_t p : img.pixels()) ++h[p];
  return h;
}

int otsu_threshold(const Histogram& hist) {
  // Class sums are kept as exact integers so that thresholds producing the
  // same split evaluate to bit-identical variances.
  std::uint64_t total = 0, total_sum = 0;
  for (int i = 0; i < 256; ++i) {
    total += hist[i];
    total_sum += hist[i] * static_cast<std::uint64_t>(i);
  }
  if (total == 0) throw InvalidArgument("otsu_threshold: empty histogram");

  const auto n = static_cast<double>(total);
  int best_t = 0;
  double best = 0.0;
  std::uint64_t dark = 0, dark_sum = 0;
  for (int t = 1; t < 256; ++t) {
    dark += hist[t - 1];
    dark_sum += hist[t - 1] * static_cast<std::uint64_t>(t - 1);
    const std::uint64_t light = total - dark;
    if (dark == 0 || light == 0) continue;
    // n^2 * sigma_b^2 = (n * S0 - n0 * S)^2 / (n0 * n1)
    const double diff = n * static_cast<double>(dark_sum) -
                        static_cast<double>(dark) * static_cast<double>(total_sum);
    const double var = diff * diff / (static_cast<double>(dark) * static_cast<double>(light));
    if (var > best) {
      best = var;
      best_t = t;
    }
  }
  return best_t;
}

BinaryImage otsu_binarize(const GrayImage& img) {
  if (img.empty()) throw InvalidArgument("otsu_binarize: empty image");
  const int t = otsu_threshold(intensity_histogram(img));
  BinaryImage out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) out.set(x, y, img.at(x, y) < t);
  return out;
}

BinaryImage mean_filter(const BinaryImage& img) {
  if (img.empty()) return img;
  const int w = img.width(), h = img.height();
  BinaryImage out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      int ink = 0, count = 0;
      for (int ny = y - 1; ny <= y + 1; ++ny) {
        if (ny < 0 || ny >= h) continue;
        for (int nx = x - 1; nx <= x + 1; ++nx) {
          if (nx < 0 || nx >= w) continue;
          ++count;
          ink += img.at(nx, ny) ? 1 : 0;
        }
      }
      out.set(x, y, 2 * ink > count);
    }
  }
  return out;
}

namespace {

// Neighbours P2..P9 clockwise from north.
constexpr int kDx[8] = {0, 1, 1, 1, 0, -1, -1, -1};
constexpr int kDy[8] = {-1, -1, 0, 1, 1, 1, 0, -1};

bool thinning_pass(BinaryImage& img, bool first) {
  std::vector<std::pair<int, int>> doomed;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      if (!img.at(x, y)) continue;
      bool p[8];
      int neighbours = 0;
      for (int k = 0; k < 8; ++k) {
        p[k] = img.get_or_blank(x + kDx[k], y + kDy[k]);
        neighbours += p[k] ? 1 : 0;
      }
      if (neighbours < 2 || neighbours > 6) continue;
      int transitions = 0;
      for (int k = 0; k < 8; ++k) transitions += (!p[k] && p[(k + 1) % 8]) ? 1 : 0;
      if (transitions != 1) continue;
      // p[0]=N p[2]=E p[4]=S p[6]=W
      const bool keep = first ? ((p[0] && p[2] && p[4]) || (p[2] && p[4] && p[6]))
                              : ((p[0] && p[2] && p[6]) || (p[0] && p[4] && p[6]));
      if (!keep) doomed.emplace_back(x, y);
    }
  }
  for (auto [x, y] : doomed) img.set(x, y, false);
  return !doomed.empty();
}

}  // namespace

BinaryImage skeletonize(const BinaryImage& img) {
  BinaryImage out = img;
  if (out.empty()) return out;
  bool changed = true;
  while (changed) {
    const bool a = thinning_pass(out, true);
    const bool b = thinning_pass(out, false);
    changed = a || b;
  }
  return out;
}

Preprocessed preprocess(const GrayImage& page) {
  BinaryImage filtered = mean_filter(otsu_binarize(page));
  BinaryImage skeleton = skeletonize(filtered);
  return {std::move(filtered), std::move(skeleton)};
}

}  // namespace wordspot
