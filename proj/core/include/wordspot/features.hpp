#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "wordspot/image.hpp"

namespace wordspot {

/// Word descriptor. Word vectors produced by extract_features always have
/// kFeatureDim entries laid out as described in `layout`; the numeric
/// modules (weighting, matching, clustering) accept any consistent length.
using FeatureVector = std::vector<double>;

inline constexpr std::size_t kFeatureDim = 93;

namespace layout {
inline constexpr std::size_t kAspectRatio = 0;
inline constexpr std::size_t kDensity = 1;
inline constexpr std::size_t kCenterOfGravity = 2;
inline constexpr std::size_t kVerticalDct = 3;
inline constexpr std::size_t kVerticalDctCount = 20;
inline constexpr std::size_t kTopDct = kVerticalDct + kVerticalDctCount;  // 23
inline constexpr std::size_t kTopDctCount = 25;
inline constexpr std::size_t kBottomDct = kTopDct + kTopDctCount;  // 48
inline constexpr std::size_t kBottomDctCount = 25;
inline constexpr std::size_t kUpperGrid = kBottomDct + kBottomDctCount;  // 73
inline constexpr std::size_t kLowerGrid = kUpperGrid + 10;               // 83
inline constexpr std::size_t kEnd = kLowerGrid + 10;
static_assert(kEnd == kFeatureDim);
}  // namespace layout

/// Per-column profile before normalization. `samples.size()` is the native
/// length (the word width).
struct ProfileSignal {
  std::vector<double> samples;
};

/// Word area density, 100 * ink / (width * height).
double density(const BinaryImage& word);

/// Distance of the normalized ink centroid (M10/M00, M01/M00) from the
/// top-left corner. Throws InvalidArgument when the word has no ink.
double center_of_gravity(const BinaryImage& word);

/// Per column: height minus the row of the first ink pixel from the top,
/// i.e. the column count after flooding everything below it; 0 for blank
/// columns.
ProfileSignal top_profile(const BinaryImage& word);

/// Mirror of top_profile: rows flooded from the bottom up to and including
/// the last ink pixel.
ProfileSignal bottom_profile(const BinaryImage& word);

ProfileSignal vertical_profile(const BinaryImage& word);

inline constexpr std::size_t kProfileResampleLength = 256;

/// Spectrum of a profile: divide by word height, 5-point moving average with
/// clamped edges, linear resampling to 256 samples, orthonormal DCT-II,
/// first n_coeffs coefficients.
std::vector<double> profile_dct_features(const ProfileSignal& profile, int word_height,
                                         std::size_t n_coeffs);

enum class GridPart { Upper, Lower };

/// Ten occupancy bits over the upper or lower half of the word. Column cell
/// i spans [floor(i*W/10), floor((i+1)*W/10)); a bit is set when the cell's
/// ink density is at least 5%. Requires height >= 2.
std::array<bool, 10> grid_features(const BinaryImage& word, GridPart part);

/// Full 93-value descriptor of a tight, skeletonized word crop.
FeatureVector extract_features(const BinaryImage& word);

}  // namespace wordspot
