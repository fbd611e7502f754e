#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wordspot/dct.hpp"

using namespace wordspot;

TEST_SUITE("dct") {

TEST_CASE("constant signal has only a DC term") {
  const double c = 0.375;
  std::vector<double> x(256, c);
  auto X = dct2(x);
  CHECK(X[0] == doctest::Approx(16.0 * c).epsilon(1e-14));
  for (std::size_t k = 1; k < X.size(); ++k) CHECK(std::abs(X[k]) <= 1e-9);
}

TEST_CASE("zero signal") {
  std::vector<double> x(64, 0.0);
  for (double v : dct2(x)) CHECK(v == 0.0);
}

TEST_CASE("matches the cosine-sum definition") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (std::size_t n : {1u, 2u, 7u, 64u, 256u}) {
    std::vector<double> x(n);
    for (auto& v : x) v = u(rng);
    auto fast = dct2(x);
    auto ref = oracle::naive_dct(x);
    REQUIRE(fast.size() == n);
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(fast[k] - ref[k]) <= 1e-9);
  }
}

TEST_CASE("prefix of coefficients and clamping") {
  std::vector<double> x{1, 2, 3, 4, 5};
  auto full = dct2(x);
  auto head = dct2(x, 3);
  REQUIRE(head.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(head[k] == full[k]);
  CHECK(dct2(x, 50).size() == 5);
}

TEST_CASE("orthonormal transform preserves energy") {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  std::vector<double> x(256);
  for (auto& v : x) v = g(rng);
  auto X = dct2(x);
  double ex = 0, eX = 0;
  for (double v : x) ex += v * v;
  for (double v : X) eX += v * v;
  CHECK(eX == doctest::Approx(ex).epsilon(1e-12));
}

}
