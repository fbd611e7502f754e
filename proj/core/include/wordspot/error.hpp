#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordspot {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (empty input, dimension
/// mismatch, degenerate word crop, ...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Malformed file content. Carries the location the parser stopped at:
/// a byte offset for binary image formats, a 1-based line number for the
/// line-oriented text formats.
class ParseError : public Error {
public:
  enum class Unit { Byte, Line };

  ParseError(Unit unit, std::size_t where, const std::string& detail,
             const std::string& source = {})
      : Error(format(unit, where, detail, source)),
        unit_(unit),
        where_(where),
        detail_(detail) {}

  Unit unit() const noexcept { return unit_; }
  std::size_t where() const noexcept { return where_; }
  const std::string& detail() const noexcept { return detail_; }

  /// Same error, attributed to a named source (usually a file path).
  ParseError in(const std::string& source) const { return {unit_, where_, detail_, source}; }

private:
  static std::string format(Unit unit, std::size_t where, const std::string& detail,
                            const std::string& source) {
    return (source.empty() ? std::string() : source + ": ") +
           (unit == Unit::Byte ? "byte offset " : "line ") + std::to_string(where) + ": " +
           detail;
  }

  Unit unit_;
  std::size_t where_;
  std::string detail_;
};

/// File system level failure (cannot open, cannot write).
class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace wordspot
