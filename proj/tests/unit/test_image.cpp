#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "wordspot/error.hpp"
#include "wordspot/image.hpp"

using namespace wordspot;

TEST_SUITE("image") {

TEST_CASE("projections of a full 2x2 block") {
  BinaryImage img(2, 2);
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x < 2; ++x) img.set(x, y);
  CHECK(horizontal_projection(img) == std::vector<int>{2, 2});
  CHECK(vertical_projection(img) == std::vector<int>{2, 2});
}

TEST_CASE("projections of a blank image are zero") {
  BinaryImage img(7, 4);
  CHECK(horizontal_projection(img) == std::vector<int>(4, 0));
  CHECK(vertical_projection(img) == std::vector<int>(7, 0));
}

TEST_CASE("single pixel lands in its column") {
  BinaryImage img(5, 1);
  img.set(3, 0);
  CHECK(vertical_projection(img) == std::vector<int>{0, 0, 0, 1, 0});
}

TEST_CASE("projections sum to the ink count and swap under transpose") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto img = oracle::random_image(rng, 5 + trial, 9 + 2 * trial, 0.3);
    auto h = horizontal_projection(img);
    auto v = vertical_projection(img);
    long long direct = 0;
    for (auto px : img.data()) direct += px;
    CHECK(std::accumulate(h.begin(), h.end(), 0LL) == direct);
    CHECK(std::accumulate(v.begin(), v.end(), 0LL) == direct);
    auto t = transpose(img);
    CHECK(horizontal_projection(t) == v);
    CHECK(vertical_projection(t) == h);
  }
}

TEST_CASE("moments") {
  BinaryImage img(2, 2);
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x < 2; ++x) img.set(x, y);
  CHECK(geometric_moment(img, 0, 0) == 4.0);
  CHECK(geometric_moment(img, 1, 0) == 1.0);
  CHECK_THROWS_AS(geometric_moment(img, 2, 0), InvalidArgument);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto r = oracle::random_image(rng, 13, 17, 0.4);
    CHECK(geometric_moment(r, 0, 0) == double(ink_count(r)));
    for (auto [p, q] : {std::pair{1, 0}, {0, 1}, {1, 1}})
      CHECK(std::abs(geometric_moment(r, p, q) - oracle::naive_moment(r, p, q)) <= 1e-12);
  }
}

TEST_CASE("ink extent, crop and pad") {
  BinaryImage img(10, 8);
  img.set(3, 2);
  img.set(6, 5);
  auto box = ink_extent(img);
  CHECK(box == BoundingBox{3, 2, 4, 4});
  auto c = crop(img, box);
  CHECK(c.width() == 4);
  CHECK(c.at(0, 0));
  CHECK(c.at(3, 3));
  CHECK(ink_extent(BinaryImage(3, 3)).w == 0);
  auto p = pad(c, 2);
  CHECK(p.width() == 8);
  CHECK(p.at(2, 2));
  CHECK(ink_count(p) == 2);
}

TEST_CASE("intersection over union") {
  CHECK(intersection_over_union({0, 0, 10, 10}, {0, 0, 10, 10}) == 1.0);
  CHECK(intersection_over_union({0, 0, 10, 10}, {20, 0, 5, 5}) == 0.0);
  CHECK(intersection_over_union({0, 0, 10, 10}, {5, 0, 10, 10}) == doctest::Approx(50.0 / 150.0));
}

TEST_CASE("component count agrees with flood fill") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    auto img = oracle::random_image(rng, 24, 16, 0.25);
    CHECK(count_components(img) == oracle::flood_fill_components(img));
  }
}

TEST_CASE("flips are involutions") {
  std::mt19937_64 rng(3);
  auto img = oracle::random_image(rng, 9, 6, 0.5);
  CHECK(flip_vertical(flip_vertical(img)) == img);
  CHECK(flip_horizontal(flip_horizontal(img)) == img);
  CHECK(transpose(transpose(img)) == img);
}

TEST_CASE("gray conversion") {
  BinaryImage img(2, 1);
  img.set(0, 0);
  auto g = to_gray(img);
  CHECK(g.at(0, 0) == 0);
  CHECK(g.at(1, 0) == 255);
}

}
