#pragma once

// Text formats (UTF-8, '\n' line ends, fields separated by a single TAB,
// reals printed with 17 significant digits so they read back bit-exactly).
//
// Feature database
//   WORDSPOT-DB 1 dim=<d> n=<count>
//   MIN<TAB><d reals>
//   MAX<TAB><d reals>
//   <doc_id><TAB><word_id><TAB><x><TAB><y><TAB><w><TAB><h><TAB><d reals>   (count lines)
//
// Weights
//   WORDSPOT-W 1 dim=<d>
//   <index><TAB><active 0|1><TAB><lambda><TAB><weight>                   (d lines)
//
// Ground truth
//   <doc_id><TAB><word_id><TAB><x><TAB><y><TAB><w><TAB><h><TAB><text>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "wordspot/database.hpp"
#include "wordspot/weighting.hpp"

namespace wordspot {

/// Shortest round-trip-safe text for a double ("%.17g").
std::string format_real(double v);

void write_db(const FeatureDatabase& db, std::ostream& out);
void write_db(const FeatureDatabase& db, const std::filesystem::path& path);
/// Throws ParseError with the offending line number.
FeatureDatabase read_db(std::istream& in);
FeatureDatabase read_db(const std::filesystem::path& path);

void write_weights(const WeightVector& w, std::ostream& out);
void write_weights(const WeightVector& w, const std::filesystem::path& path);
/// Validates the weight invariants; violations are reported as ParseError on
/// the header line or the offending feature line.
WeightVector read_weights(std::istream& in);
WeightVector read_weights(const std::filesystem::path& path);

struct TruthRow {
  WordRef ref;
  BoundingBox box;
  std::string text;

  friend bool operator==(const TruthRow&, const TruthRow&) = default;
};

void write_truth(const std::vector<TruthRow>& rows, std::ostream& out);
void write_truth(const std::vector<TruthRow>& rows, const std::filesystem::path& path);
std::vector<TruthRow> read_truth(std::istream& in);
std::vector<TruthRow> read_truth(const std::filesystem::path& path);

}  // namespace wordspot
