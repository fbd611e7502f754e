#include "wordspot/segmentation.hpp"

#include <cmath>
#include <string>

#include "wordspot/error.hpp"

namespace wordspot {

void SegmentationConfig::validate() const {
  if (min_region_w < 1 || min_region_h < 1 || min_ink < 1 || max_depth < 1) {
    throw InvalidArgument("segmentation config values must be positive");
  }
  if (!(word_gap_factor > 0.0 && word_gap_factor < 1.0)) {
    throw InvalidArgument("word_gap_factor must lie in (0, 1), got " +
                          std::to_string(word_gap_factor));
  }
}

namespace {

class XYCutter {
public:
  XYCutter(const BinaryImage& page, const SegmentationConfig& cfg) : page_(page), cfg_(cfg) {}

  void cut(const BoundingBox& region, int depth, std::vector<BoundingBox>& out) const {
    const BoundingBox box = ink_extent(page_, region);
    if (box.w == 0) return;
    if (depth >= cfg_.max_depth) {
      emit(box, out);
      return;
    }

    // Bands: maximal runs of rows containing ink.
    std::vector<BoundingBox> bands;
    int start = -1;
    for (int y = box.y; y <= box.bottom(); ++y) {
      const bool inked = y < box.bottom() && row_has_ink(y, box);
      if (inked && start < 0) start = y;
      if (!inked && start >= 0) {
        bands.push_back({box.x, start, box.w, y - start});
        start = -1;
      }
    }
    if (bands.size() > 1) {
      for (const auto& b : bands) cut(b, depth + 1, out);
      return;
    }

    const int gap = std::max(2, static_cast<int>(std::lround(cfg_.word_gap_factor * box.h)));
    std::vector<BoundingBox> pieces;
    int piece_start = box.x;
    int blank_run = 0;
    for (int x = box.x; x < box.right(); ++x) {
      if (col_has_ink(x, box)) {
        if (blank_run >= gap) {
          pieces.push_back({piece_start, box.y, x - blank_run - piece_start, box.h});
          piece_start = x;
        }
        blank_run = 0;
      } else {
        ++blank_run;
      }
    }
    pieces.push_back({piece_start, box.y, box.right() - piece_start, box.h});
    if (pieces.size() > 1) {
      for (const auto& p : pieces) cut(p, depth + 1, out);
      return;
    }
    emit(box, out);
  }

private:
  bool row_has_ink(int y, const BoundingBox& r) const {
    for (int x = r.x; x < r.right(); ++x)
      if (page_.at(x, y)) return true;
    return false;
  }

  bool col_has_ink(int x, const BoundingBox& r) const {
    for (int y = r.y; y < r.bottom(); ++y)
      if (page_.at(x, y)) return true;
    return false;
  }

  void emit(const BoundingBox& box, std::vector<BoundingBox>& out) const {
    if (box.w < cfg_.min_region_w || box.h < cfg_.min_region_h) return;
    if (ink_count(page_, box) < cfg_.min_ink) return;
    out.push_back(box);
  }

  const BinaryImage& page_;
  const SegmentationConfig& cfg_;
};

}  // namespace

std::vector<BoundingBox> segment_words(const BinaryImage& page, const SegmentationConfig& cfg) {
  cfg.validate();
  std::vector<BoundingBox> boxes;
  if (page.empty()) return boxes;
  XYCutter(page, cfg).cut({0, 0, page.width(), page.height()}, 0, boxes);
  return boxes;
}

}  // namespace wordspot
