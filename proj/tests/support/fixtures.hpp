#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

namespace fixtures {

inline std::filesystem::path dir() { return WORDSPOT_FIXTURE_DIR; }

enum class Kind { Database, Weights, Truth };

struct Malformed {
  const char* file;
  Kind kind;
  std::size_t line;  // line the reader must report
};

inline const std::vector<Malformed>& malformed() {
  static const std::vector<Malformed> all{
      {"db_bad_version.tsv", Kind::Database, 1},
      {"db_bad_field_count.tsv", Kind::Database, 4},
      {"db_non_numeric.tsv", Kind::Database, 5},
      {"db_stats_mismatch.tsv", Kind::Database, 2},
      {"db_truncated.tsv", Kind::Database, 5},
      {"db_duplicate_ref.tsv", Kind::Database, 5},
      {"weights_bad_sum.tsv", Kind::Weights, 1},
      {"weights_bad_flag.tsv", Kind::Weights, 3},
      {"weights_missing_line.tsv", Kind::Weights, 4},
      {"weights_non_numeric.tsv", Kind::Weights, 3},
      {"truth_bad_field_count.tsv", Kind::Truth, 2},
  };
  return all;
}

}  // namespace fixtures
