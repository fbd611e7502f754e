#include "wordspot/image.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "wordspot/error.hpp"

namespace wordspot {

namespace {

void check_dims(int width, int height) {
  if (width < 1 || height < 1) {
    throw InvalidArgument("image dimensions must be positive, got " + std::to_string(width) +
                          "x" + std::to_string(height));
  }
}

}  // namespace

GrayImage::GrayImage(int width, int height, std::uint8_t fill) : width_(width), height_(height) {
  check_dims(width, height);
  pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_dims(width, height);
  if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw InvalidArgument("pixel count does not match image dimensions");
  }
}

BinaryImage::BinaryImage(int width, int height) : width_(width), height_(height) {
  check_dims(width, height);
  ink_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
}

double intersection_over_union(const BoundingBox& a, const BoundingBox& b) {
  const int ix = std::max(0, std::min(a.right(), b.right()) - std::max(a.x, b.x));
  const int iy = std::max(0, std::min(a.bottom(), b.bottom()) - std::max(a.y, b.y));
  const double inter = static_cast<double>(ix) * iy;
  const double uni = static_cast<double>(a.area()) + static_cast<double>(b.area()) - inter;
  return uni > 0.0 ? inter / uni : 0.0;
}

long long ink_count(const BinaryImage& img) {
  return std::count(img.data().begin(), img.data().end(), std::uint8_t{1});
}

long long ink_count(const BinaryImage& img, const BoundingBox& r) {
  long long n = 0;
  for (int y = r.y; y < r.bottom(); ++y)
    for (int x = r.x; x < r.right(); ++x) n += img.at(x, y) ? 1 : 0;
  return n;
}

BoundingBox ink_extent(const BinaryImage& img, const BoundingBox& r) {
  int x0 = r.right(), y0 = r.bottom(), x1 = r.x - 1, y1 = r.y - 1;
  for (int y = r.y; y < r.bottom(); ++y) {
    for (int x = r.x; x < r.right(); ++x) {
      if (!img.at(x, y)) continue;
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  if (x1 < x0) return {r.x, r.y, 0, 0};
  return {x0, y0, x1 - x0 + 1, y1 - y0 + 1};
}

BoundingBox ink_extent(const BinaryImage& img) {
  if (img.empty()) return {};
  return ink_extent(img, {0, 0, img.width(), img.height()});
}

BinaryImage crop(const BinaryImage& img, const BoundingBox& r) {
  if (r.w < 1 || r.h < 1 || r.x < 0 || r.y < 0 || r.right() > img.width() ||
      r.bottom() > img.height()) {
    throw InvalidArgument("crop region outside image");
  }
  BinaryImage out(r.w, r.h);
  for (int y = 0; y < r.h; ++y)
    for (int x = 0; x < r.w; ++x) out.set(x, y, img.at(r.x + x, r.y + y));
  return out;
}

BinaryImage pad(const BinaryImage& img, int margin) {
  BinaryImage out(img.width() + 2 * margin, img.height() + 2 * margin);
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) out.set(x + margin, y + margin, img.at(x, y));
  return out;
}

BinaryImage transpose(const BinaryImage& img) {
  BinaryImage out(img.height(), img.width());
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) out.set(y, x, img.at(x, y));
  return out;
}

BinaryImage flip_vertical(const BinaryImage& img) {
  BinaryImage out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) out.set(x, img.height() - 1 - y, img.at(x, y));
  return out;
}

BinaryImage flip_horizontal(const BinaryImage& img) {
  BinaryImage out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) out.set(img.width() - 1 - x, y, img.at(x, y));
  return out;
}

GrayImage to_gray(const BinaryImage& img) {
  std::vector<std::uint8_t> px(img.data().size());
  std::transform(img.data().begin(), img.data().end(), px.begin(),
                 [](std::uint8_t ink) { return ink ? std::uint8_t{0} : std::uint8_t{255}; });
  return GrayImage(img.width(), img.height(), std::move(px));
}

std::vector<int> horizontal_projection(const BinaryImage& img) {
  std::vector<int> rows(static_cast<std::size_t>(img.height()), 0);
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) rows[y] += img.at(x, y) ? 1 : 0;
  return rows;
}

std::vector<int> vertical_projection(const BinaryImage& img) {
  std::vector<int> cols(static_cast<std::size_t>(img.width()), 0);
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) cols[x] += img.at(x, y) ? 1 : 0;
  return cols;
}

double geometric_moment(const BinaryImage& img, int p, int q) {
  if (p < 0 || p > 1 || q < 0 || q > 1) {
    throw InvalidArgument("geometric_moment supports p, q in {0, 1}");
  }
  const double w = img.width();
  const double h = img.height();
  double m = 0.0;
  for (int y = 0; y < img.height(); ++y) {
    const double fy = q == 1 ? y / h : 1.0;
    for (int x = 0; x < img.width(); ++x) {
      if (!img.at(x, y)) continue;
      m += (p == 1 ? x / w : 1.0) * fy;
    }
  }
  return m;
}

int count_components(const BinaryImage& img) {
  if (img.empty()) return 0;
  std::vector<std::uint8_t> seen(img.data().size(), 0);
  std::vector<std::pair<int, int>> stack;
  int components = 0;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const auto idx = static_cast<std::size_t>(y) * img.width() + x;
      if (!img.at(x, y) || seen[idx]) continue;
      ++components;
      seen[idx] = 1;
      stack.emplace_back(x, y);
      while (!stack.empty()) {
        auto [cx, cy] = stack.back();
        stack.pop_back();
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const int nx = cx + dx, ny = cy + dy;
            if (!img.get_or_blank(nx, ny)) continue;
            const auto nidx = static_cast<std::size_t>(ny) * img.width() + nx;
            if (seen[nidx]) continue;
            seen[nidx] = 1;
            stack.emplace_back(nx, ny);
          }
        }
      }
    }
  }
  return components;
}

}  // namespace wordspot
