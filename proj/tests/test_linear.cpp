#include <doctest.h>

#include <random>

#include "zzq/error.hpp"
#include "zzq/matrix.hpp"

using namespace zzq;

namespace {

Mat random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937& rng) {
  Mat m(f, r, c);
  std::uniform_int_distribution<std::uint32_t> d(0, f.p() - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

/// All vectors of GF(p)^n.
std::vector<Vec> all_vectors(const Field& f, std::size_t n) {
  std::vector<Vec> out{Vec(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec> next;
    for (const auto& v : out)
      for (Scalar x = 0; x < f.p(); ++x) {
        Vec w = v;
        w[i] = x;
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

bool is_zero(const Vec& v) {
  for (auto x : v)
    if (x) return false;
  return true;
}

}  // namespace

TEST_CASE("field arithmetic") {
  Field f(7);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.reduce(-1) == 6);
  CHECK_THROWS_AS(Field(4), InvalidInput);
  CHECK_THROWS_AS(Field(1), InvalidInput);
  CHECK_THROWS_AS(Field(257), InvalidInput);
  for (std::uint32_t p : {2u, 3u, 5u, 251u}) {
    Field g(p);
    for (Scalar a = 1; a < p; ++a) CHECK(g.mul(a, g.inv(a)) == 1);
  }
}

TEST_CASE("rank examples") {
  Field f2(2);
  CHECK(rank(Mat::identity(f2, 2)) == 2);
  CHECK(rank(Mat(f2, 2, 2)) == 0);
  CHECK(rank(Mat(f2, {{1, 1}, {1, 1}})) == 1);
  CHECK(rank(Mat(Field(3), {{1, 2}, {2, 1}})) == 1);  // second row is twice the first mod 3
}

TEST_CASE("kernel examples") {
  Field f2(2);
  CHECK(kernel_basis(Mat::identity(f2, 3)).empty());
  CHECK(kernel_basis(Mat(f2, 3, 3)).size() == 3);
  const auto k = kernel_basis(Mat(f2, {{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vec{1, 1});
  CHECK(kernel_basis(Mat(f2, 0, 2)).size() == 2);
}

TEST_CASE("solve examples") {
  Field f2(2);
  const Vec b{1, 0};
  CHECK(solve(Mat::identity(f2, 2), b) == b);
  CHECK_FALSE(solve(Mat(f2, 2, 2), Vec{1, 0}).has_value());
  const auto x = solve(Mat(f2, {{1, 0}, {1, 0}}), Vec{1, 1});
  REQUIRE(x.has_value());
  CHECK(Mat(f2, {{1, 0}, {1, 0}}).apply(*x) == Vec{1, 1});
  CHECK_THROWS_AS(solve(Mat::identity(f2, 2), Vec{1, 0, 0}), ContractViolation);
}

TEST_CASE("kernel and solve agree with brute-force enumeration") {
  std::mt19937 rng(11);
  for (std::uint32_t p : {2u, 3u}) {
    Field f(p);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = 1 + rng() % 3, c = 1 + rng() % 4;
      const Mat m = random_matrix(f, r, c, rng);
      const auto vectors = all_vectors(f, c);
      std::size_t null_count = 0;
      for (const auto& v : vectors) null_count += is_zero(m.apply(v));
      std::size_t expected = 1;
      for (std::size_t i = 0; i < kernel_basis(m).size(); ++i) expected *= p;
      CHECK(null_count == expected);
      for (const auto& v : kernel_basis(m)) CHECK(is_zero(m.apply(v)));

      for (const auto& b : all_vectors(f, r)) {
        bool reachable = false;
        for (const auto& v : vectors) reachable = reachable || m.apply(v) == b;
        const auto x = solve(m, b);
        CHECK(x.has_value() == reachable);
        if (x) CHECK(m.apply(*x) == b);
      }
    }
  }
}

TEST_CASE("rank properties") {
  std::mt19937 rng(5);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Field f(p);
    for (int trial = 0; trial < 60; ++trial) {
      const Mat m = random_matrix(f, 1 + rng() % 6, 1 + rng() % 6, rng);
      CHECK(rank(m) + kernel_basis(m).size() == m.cols());
      CHECK(rank(m) == rank(m.transpose()));
      CHECK(column_basis(m).cols() == rank(m));
      CHECK(rank(hstack(column_basis(m), complement_columns(column_basis(m)))) == m.rows());
    }
  }
}

TEST_CASE("matrix products") {
  Field f(5);
  const Mat a(f, {{1, 2}, {3, 4}});
  CHECK(a * Mat::identity(f, 2) == a);
  CHECK(power(a, 0) == Mat::identity(f, 2));
  CHECK(power(a, 2) == a * a);
  CHECK(is_invertible(a));
  CHECK_FALSE(is_invertible(Mat(f, {{1, 2}, {2, 4}})));
  CHECK_THROWS_AS(a * Mat(f, 3, 1), ContractViolation);
}
