#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace wordspot {

/// 8-bit grayscale raster, row-major. 0 is black, 255 is white.
class GrayImage {
public:
  GrayImage() = default;
  GrayImage(int width, int height, std::uint8_t fill = 255);
  GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  bool empty() const noexcept { return pixels_.empty(); }

  std::uint8_t at(int x, int y) const { return pixels_[index(x, y)]; }
  std::uint8_t& at(int x, int y) { return pixels_[index(x, y)]; }

  const std::vector<std::uint8_t>& pixels() const noexcept { return pixels_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

/// Ink mask, row-major. A set pixel is foreground (black).
class BinaryImage {
public:
  BinaryImage() = default;
  BinaryImage(int width, int height);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  bool empty() const noexcept { return ink_.empty(); }

  bool at(int x, int y) const { return ink_[index(x, y)] != 0; }
  void set(int x, int y, bool v = true) { ink_[index(x, y)] = v ? 1 : 0; }

  /// Out-of-range coordinates read as background.
  bool get_or_blank(int x, int y) const {
    return x >= 0 && y >= 0 && x < width_ && y < height_ && at(x, y);
  }

  const std::vector<std::uint8_t>& data() const noexcept { return ink_; }

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> ink_;
};

/// Axis-aligned box in page pixel coordinates; (x, y) is the top-left corner.
struct BoundingBox {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  int right() const noexcept { return x + w; }
  int bottom() const noexcept { return y + h; }
  long long area() const noexcept { return static_cast<long long>(w) * h; }

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

double intersection_over_union(const BoundingBox& a, const BoundingBox& b);

long long ink_count(const BinaryImage& img);
long long ink_count(const BinaryImage& img, const BoundingBox& region);

/// Tight box around the ink inside `region`; w == 0 when the region is blank.
BoundingBox ink_extent(const BinaryImage& img, const BoundingBox& region);
BoundingBox ink_extent(const BinaryImage& img);

BinaryImage crop(const BinaryImage& img, const BoundingBox& region);

/// Copy of `img` surrounded by `margin` blank pixels on every side.
BinaryImage pad(const BinaryImage& img, int margin);

BinaryImage transpose(const BinaryImage& img);
BinaryImage flip_vertical(const BinaryImage& img);
BinaryImage flip_horizontal(const BinaryImage& img);

/// Ink becomes 0, background 255.
GrayImage to_gray(const BinaryImage& img);

/// Ink pixels per row (length = height).
std::vector<int> horizontal_projection(const BinaryImage& img);
/// Ink pixels per column (length = width).
std::vector<int> vertical_projection(const BinaryImage& img);

/// Normalized geometric moment M_pq = sum over ink of (x/width)^p (y/height)^q,
/// for p, q in {0, 1}.
double geometric_moment(const BinaryImage& img, int p, int q);

/// 8-connected foreground components.
int count_components(const BinaryImage& img);

}  // namespace wordspot
