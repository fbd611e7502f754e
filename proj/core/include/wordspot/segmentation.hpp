#pragma once

#include <vector>

#include "wordspot/image.hpp"

namespace wordspot {

struct SegmentationConfig {
  int min_region_w = 3;
  int min_region_h = 3;
  int min_ink = 5;
  /// Word gap as a fraction of the band height; must lie in (0, 1).
  double word_gap_factor = 0.35;
  int max_depth = 6;

  void validate() const;
};

/// Recursive X-Y cut. Bands are separated by any fully blank row; inside a
/// band, pieces are separated by blank column runs of at least
/// max(2, round(word_gap_factor * band height)). Returned boxes are tight,
/// noise-sized regions are dropped, and the order is band by band, left to
/// right within a band.
std::vector<BoundingBox> segment_words(const BinaryImage& page,
                                       const SegmentationConfig& cfg = {});

}  // namespace wordspot
