#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wordspot/database.hpp"
#include "wordspot/features.hpp"
#include "wordspot/image.hpp"
#include "wordspot/preprocess.hpp"
#include "wordspot/segmentation.hpp"

namespace wordspot {

/// Blank border added around a query image before preprocessing so the
/// 3x3 filters see the same neighbourhood a word has on a page.
inline constexpr int kQueryMargin = 8;

/// Skeleton pixels inside `box`, trimmed to their own ink extent. Returns an
/// empty image when the box holds no skeleton ink.
BinaryImage word_crop(const Preprocessed& pre, const BoundingBox& box);

/// Offline path for one page: preprocess, cut word boxes from the filtered
/// image, extract features from the skeleton inside each box. Word ids are
/// assigned in reading order; boxes whose skeleton is degenerate (no ink or
/// a single row) are skipped.
std::vector<WordRecord> index_page(const GrayImage& page, const std::string& doc_id,
                                   const SegmentationConfig& cfg = {});

struct Page {
  std::string doc_id;
  GrayImage image;
};

/// index_page over every page, in parallel, merged in input order.
FeatureDatabase index_pages(const std::vector<Page>& pages, const SegmentationConfig& cfg = {},
                            unsigned threads = 0);

/// Online path: a rendered query word (ink mask, no margin needed) goes
/// through the identical preprocessing and cropping as an indexed word.
FeatureVector query_features(const BinaryImage& word_image, const SegmentationConfig& cfg = {});

}  // namespace wordspot
