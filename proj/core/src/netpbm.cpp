#include "wordspot/netpbm.hpp"

#include <cstdint>
#include <fstream>
#include <iterator>
#include <sstream>

#include "wordspot/error.hpp"

namespace wordspot {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\v' || c == '\f' || c == '\r';
}

class Cursor {
public:
  explicit Cursor(std::string_view bytes) : bytes_(bytes) {}

  std::size_t offset() const noexcept { return pos_; }
  bool done() const noexcept { return pos_ >= bytes_.size(); }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ParseError::Unit::Byte, pos_, what);
  }

  void skip_space_and_comments() {
    while (!done()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (!done() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  unsigned long number(const char* field, unsigned long lo, unsigned long hi) {
    skip_space_and_comments();
    if (done()) fail(std::string("unexpected end of data reading ") + field);
    if (bytes_[pos_] < '0' || bytes_[pos_] > '9') fail(std::string("expected decimal ") + field);
    unsigned long v = 0;
    const std::size_t start = pos_;
    while (!done() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      v = v * 10 + static_cast<unsigned long>(bytes_[pos_] - '0');
      if (v > hi) {
        pos_ = start;
        fail(std::string(field) + " out of range");
      }
      ++pos_;
    }
    if (v < lo) {
      pos_ = start;
      fail(std::string(field) + " out of range");
    }
    if (!done() && !is_space(bytes_[pos_]) && bytes_[pos_] != '#') {
      fail(std::string("garbage after ") + field);
    }
    return v;
  }

  // The single whitespace byte separating a raw header from its payload.
  void raster_separator() {
    if (done() || !is_space(bytes_[pos_])) fail("expected single whitespace before raster");
    ++pos_;
  }

  char bit_char() {
    skip_space_and_comments();
    if (done()) fail("truncated payload");
    const char c = bytes_[pos_];
    if (c != '0' && c != '1') fail("expected '0' or '1'");
    ++pos_;
    return c;
  }

  std::uint8_t byte() {
    if (done()) fail("truncated payload");
    return static_cast<std::uint8_t>(bytes_[pos_++]);
  }

  std::string_view magic() {
    if (bytes_.size() < 2) fail("missing magic number");
    pos_ = 2;
    return bytes_.substr(0, 2);
  }

private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

constexpr unsigned long kMaxDim = 1UL << 20;

std::uint8_t rescale(unsigned long v, unsigned long maxval) {
  if (maxval == 255) return static_cast<std::uint8_t>(v);
  return static_cast<std::uint8_t>((v * 255 + maxval / 2) / maxval);
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

AnyImage decode_netpbm(std::string_view bytes) {
  Cursor cur(bytes);
  const std::string_view magic = cur.magic();
  const bool plain_bits = magic == "P1", plain_gray = magic == "P2";
  const bool raw_bits = magic == "P4", raw_gray = magic == "P5";
  if (!(plain_bits || plain_gray || raw_bits || raw_gray)) {
    throw ParseError(ParseError::Unit::Byte, 0, "unsupported magic number");
  }
  if (!cur.done() && !is_space(bytes[cur.offset()]) && bytes[cur.offset()] != '#') {
    cur.fail("expected whitespace after magic number");
  }

  const int width = static_cast<int>(cur.number("width", 1, kMaxDim));
  const int height = static_cast<int>(cur.number("height", 1, kMaxDim));

  if (plain_bits || raw_bits) {
    BinaryImage img(width, height);
    if (plain_bits) {
      for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) img.set(x, y, cur.bit_char() == '1');
    } else {
      cur.raster_separator();
      for (int y = 0; y < height; ++y) {
        std::uint8_t byte = 0;
        for (int x = 0; x < width; ++x) {
          if (x % 8 == 0) byte = cur.byte();
          img.set(x, y, (byte >> (7 - x % 8)) & 1);
        }
      }
    }
    return img;
  }

  const unsigned long maxval = cur.number("maxval", 1, 65535);
  std::vector<std::uint8_t> px(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
  if (plain_gray) {
    for (auto& p : px) p = rescale(cur.number("sample", 0, maxval), maxval);
  } else {
    cur.raster_separator();
    for (auto& p : px) {
      unsigned long v = cur.byte();
      if (maxval > 255) v = (v << 8) | cur.byte();
      if (v > maxval) cur.fail("sample exceeds maxval");
      p = rescale(v, maxval);
    }
  }
  return GrayImage(width, height, std::move(px));
}

std::string encode_pbm(const BinaryImage& img, bool plain) {
  std::ostringstream out;
  out << (plain ? "P1\n" : "P4\n") << img.width() << ' ' << img.height() << '\n';
  if (plain) {
    for (int y = 0; y < img.height(); ++y) {
      for (int x = 0; x < img.width(); ++x) {
        if (x > 0) out << ' ';
        out << (img.at(x, y) ? '1' : '0');
      }
      out << '\n';
    }
    return out.str();
  }
  std::string s = out.str();
  const int row_bytes = (img.width() + 7) / 8;
  for (int y = 0; y < img.height(); ++y) {
    for (int b = 0; b < row_bytes; ++b) {
      std::uint8_t byte = 0;
      for (int bit = 0; bit < 8; ++bit) {
        const int x = b * 8 + bit;
        if (x < img.width() && img.at(x, y)) byte |= static_cast<std::uint8_t>(0x80u >> bit);
      }
      s.push_back(static_cast<char>(byte));
    }
  }
  return s;
}

std::string encode_pgm(const GrayImage& img) {
  std::string s = "P5\n" + std::to_string(img.width()) + ' ' + std::to_string(img.height()) +
                  "\n255\n";
  s.append(img.pixels().begin(), img.pixels().end());
  return s;
}

AnyImage read_image(const std::filesystem::path& path) {
  const std::string bytes = slurp(path);
  try {
    return decode_netpbm(bytes);
  } catch (const ParseError& e) {
    throw e.in(path.string());
  }
}

GrayImage read_gray(const std::filesystem::path& path) {
  AnyImage img = read_image(path);
  if (auto* bin = std::get_if<BinaryImage>(&img)) return to_gray(*bin);
  return std::get<GrayImage>(std::move(img));
}

void write_image(const BinaryImage& img, const std::filesystem::path& path, bool plain) {
  spit(path, encode_pbm(img, plain));
}

void write_image(const GrayImage& img, const std::filesystem::path& path) {
  spit(path, encode_pgm(img));
}

}  // namespace wordspot
