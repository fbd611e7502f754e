#include <doctest.h>

#include <filesystem>
#include <random>
#include <string>

#include "oracles.hpp"
#include "wordspot/error.hpp"
#include "wordspot/netpbm.hpp"

using namespace wordspot;
using namespace std::string_literals;

TEST_SUITE("netpbm") {

TEST_CASE("plain P1 checkerboard") {
  auto img = std::get<BinaryImage>(decode_netpbm("P1\n2 2\n1 0\n0 1\n"));
  CHECK(img.width() == 2);
  CHECK(img.at(0, 0));
  CHECK_FALSE(img.at(1, 0));
  CHECK_FALSE(img.at(0, 1));
  CHECK(img.at(1, 1));
}

TEST_CASE("plain P1 allows comments and packed digits") {
  auto img = std::get<BinaryImage>(decode_netpbm("P1 # a comment\n3 1\n101"));
  CHECK(img.at(0, 0));
  CHECK_FALSE(img.at(1, 0));
  CHECK(img.at(2, 0));
}

TEST_CASE("raw P5 of zeros") {
  std::string bytes = "P5\n3 2\n255\n"s + std::string(6, '\0');
  auto img = std::get<GrayImage>(decode_netpbm(bytes));
  CHECK(img == GrayImage(3, 2, 0));
}

TEST_CASE("P2 with a small maxval is rescaled") {
  auto img = std::get<GrayImage>(decode_netpbm("P2\n2 1\n4\n0 4\n"));
  CHECK(img.at(0, 0) == 0);
  CHECK(img.at(1, 0) == 255);
}

TEST_CASE("binary round trips in raw and plain form") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    auto img = oracle::random_image(rng, 1 + trial * 3, 1 + trial, 0.5);
    CHECK(std::get<BinaryImage>(decode_netpbm(encode_pbm(img))) == img);
    CHECK(std::get<BinaryImage>(decode_netpbm(encode_pbm(img, true))) == img);
  }
}

TEST_CASE("gray round trip") {
  std::mt19937_64 rng(4);
  std::vector<std::uint8_t> px(40 * 7);
  for (auto& p : px) p = static_cast<std::uint8_t>(rng() % 256);
  GrayImage img(40, 7, px);
  CHECK(std::get<GrayImage>(decode_netpbm(encode_pgm(img))) == img);
}

TEST_CASE("file round trip and gray view of a bitmap") {
  auto path = std::filesystem::temp_directory_path() / "wordspot_netpbm_test.pbm";
  BinaryImage img(3, 2);
  img.set(1, 1);
  write_image(img, path);
  CHECK(std::get<BinaryImage>(read_image(path)) == img);
  auto g = read_gray(path);
  CHECK(g.at(1, 1) == 0);
  CHECK(g.at(0, 0) == 255);
  std::filesystem::remove(path);
}

TEST_CASE("malformed input is reported with a byte offset") {
  for (const char* bad : {"", "P7\n1 1\n", "P1\n2\n", "P1\n2 2\n1 0 1\n", "P5\n2 2\n255\n\x01",
                          "P2\n1 1\n0\n0\n", "P2\n1 1\n70000\n0\n", "P1\n0 3\n"}) {
    CAPTURE(std::string(bad));
    try {
      decode_netpbm(bad);
      FAIL("accepted malformed input");
    } catch (const ParseError& e) {
      CHECK(e.unit() == ParseError::Unit::Byte);
    }
  }
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(read_image("/nonexistent/wordspot.pbm"), IoError);
}

}
