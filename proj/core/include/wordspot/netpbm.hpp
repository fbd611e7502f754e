#pragma once

// Netpbm subset used for page and query images.
//
// Header grammar (all four formats):
//
//   magic      "P1" | "P2" | "P4" | "P5"
//   separator  one or more of space, \t, \n, \v, \f, \r; a '#' starts a
//              comment that runs to the end of the line and counts as
//              whitespace
//   fields     width, height (decimal, >= 1), then maxval (decimal, 1..65535)
//              for P2/P5 only
//
// Payload:
//   P1  '0'/'1' characters, whitespace optional between them, 1 = black
//   P2  decimal samples in [0, maxval], whitespace separated
//   P4  exactly one whitespace byte after the header, then rows of
//       ceil(width / 8) bytes, most significant bit first, 1 = black
//   P5  exactly one whitespace byte after the header, then width * height
//       samples, one byte each (maxval < 256) or two bytes big-endian
//
// Gray samples with maxval != 255 are rescaled to 0..255 with rounding.
// Trailing bytes after the payload are ignored.

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "wordspot/image.hpp"

namespace wordspot {

using AnyImage = std::variant<GrayImage, BinaryImage>;

/// Throws ParseError (byte offset) on a malformed header, unsupported magic
/// or truncated payload.
AnyImage decode_netpbm(std::string_view bytes);

std::string encode_pbm(const BinaryImage& img, bool plain = false);
std::string encode_pgm(const GrayImage& img);

AnyImage read_image(const std::filesystem::path& path);

/// Reads any supported format as gray; PBM ink maps to 0, background to 255.
GrayImage read_gray(const std::filesystem::path& path);

void write_image(const BinaryImage& img, const std::filesystem::path& path, bool plain = false);
void write_image(const GrayImage& img, const std::filesystem::path& path);

}  // namespace wordspot
