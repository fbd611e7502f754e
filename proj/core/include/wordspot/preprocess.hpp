#pragma once

#include <array>
#include <cstdint>

#include "wordspot/image.hpp"

namespace wordspot {

using Histogram = std::array<std::uint64_t, 256>;

Histogram intensity_histogram(const GrayImage& img);

/// Otsu threshold t in [0, 255]: pixels with intensity < t form the dark
/// class. Returns the smallest t maximizing the between-class variance; a
/// histogram with a single occupied bin yields 0 (no split).
int otsu_threshold(const Histogram& hist);

/// Ink where intensity < otsu_threshold. A constant image has no ink.
BinaryImage otsu_binarize(const GrayImage& img);

/// 3x3 box filter re-binarized by strict majority; border pixels use the
/// clipped neighbourhood.
BinaryImage mean_filter(const BinaryImage& img);

/// Zhang-Suen two-subiteration thinning, iterated until nothing changes.
BinaryImage skeletonize(const BinaryImage& img);

/// Intermediate images of the preprocessing chain. `filtered` is what word
/// boxes are cut from; `skeleton` is what features are measured on.
struct Preprocessed {
  BinaryImage filtered;
  BinaryImage skeleton;
};

/// binarize -> mean filter -> skeletonize
Preprocessed preprocess(const GrayImage& page);

}  // namespace wordspot
