#include <random>
#include <stdexcept>

#include "doctest.h"
#include "qppc/bitmatrix.hpp"
#include "qppc/bitvec.hpp"

using namespace qppc;

namespace {

BitVec random_vec(std::size_t n, std::mt19937_64& rng) {
  BitVec v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1U);
  return v;
}

BitMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  BitMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng() & 1U);
  }
  return m;
}

}  // namespace

TEST_CASE("polar transform examples") {
  CHECK(polar_transform(BitVec{1, 0}, 1) == BitVec{1, 0});
  CHECK(polar_transform(BitVec{0, 0, 0, 0}, 2) == BitVec{0, 0, 0, 0});
  CHECK(polar_transform(BitVec{0, 0, 0, 1}, 2) == BitVec{1, 1, 1, 1});
  CHECK_THROWS_AS(polar_transform(BitVec{1, 0, 1}, 2), std::invalid_argument);
}

TEST_CASE("reverse examples") {
  CHECK(reverse(BitVec{1, 0, 0, 0}) == BitVec{0, 0, 0, 1});
  CHECK(reverse(BitVec{0, 0}) == BitVec{0, 0});
  CHECK(reverse(BitVec{1, 0, 1, 1}) == BitVec{1, 1, 0, 1});
}

TEST_CASE("mat_mul examples") {
  std::mt19937_64 rng(7);
  const BitMatrix m = random_matrix(5, 5, rng);
  CHECK(mat_mul(BitMatrix::identity(5), m) == m);
  const BitMatrix u{{1, 1}, {0, 1}};
  CHECK(mat_mul(u, u) == BitMatrix::identity(2));
  const BitMatrix g2{{1, 0}, {1, 1}};
  CHECK(mat_mul(u, g2) == BitMatrix{{0, 1}, {1, 1}});
  CHECK_THROWS_AS(mat_mul(BitMatrix(2, 3), BitMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("project_columns and nnz") {
  const BitMatrix p = project_columns(BitMatrix::identity(4), std::vector<std::size_t>{0, 3});
  CHECK(p == BitMatrix{{1, 0}, {0, 0}, {0, 0}, {0, 1}});
  std::mt19937_64 rng(3);
  const BitMatrix m = random_matrix(4, 6, rng);
  CHECK(project_columns(m, std::vector<std::size_t>{0, 1, 2, 3, 4, 5}) == m);
  CHECK(project_columns(BitMatrix::polar(2), std::vector<std::size_t>{0}) == BitMatrix{{1}, {1}, {1}, {1}});
  CHECK_THROWS_AS(project_columns(m, std::vector<std::size_t>{6}), std::invalid_argument);

  CHECK(nnz(BitMatrix(3, 3)) == 0);
  CHECK(nnz(BitMatrix::identity(8)) == 8);
  CHECK(nnz(BitMatrix::polar(2)) == 9);
}

TEST_CASE("polar transform is an involution and matches the dense product") {
  std::mt19937_64 rng(11);
  for (int n = 0; n <= 6; ++n) {
    const std::size_t len = std::size_t{1} << n;
    const BitMatrix g = kron_power(BitMatrix{{1, 0}, {1, 1}}, n);
    const auto dense_g = reference::kron_power({{1, 0}, {1, 1}}, n);
    CHECK(reference::to_dense(g) == dense_g);
    for (int rep = 0; rep < 20; ++rep) {
      const BitVec u = random_vec(len, rng);
      const BitVec x = polar_transform(u, n);
      CHECK(polar_transform(x, n) == u);
      CHECK(x == vec_mul(u, g));
      CHECK(x.to_bits() == reference::vec_mul(u.to_bits(), dense_g));
      CHECK(reverse(reverse(u)) == u);
      CHECK(reverse(polar_transform(reverse(u), n)) == vec_mul(u, g.transposed()));
      CHECK(polar_transform_transposed(u, n) == vec_mul(u, g.transposed()));
    }
  }
}

TEST_CASE("large polar transform crosses word boundaries") {
  std::mt19937_64 rng(5);
  for (int n : {7, 8, 9}) {
    const BitVec u = random_vec(std::size_t{1} << n, rng);
    const BitMatrix g = BitMatrix::polar(n);
    CHECK(polar_transform(u, n) == vec_mul(u, g));
    CHECK(polar_transform(polar_transform(u, n), n) == u);
  }
}

TEST_CASE("packed mat_mul agrees with unpacked reference and is associative") {
  std::mt19937_64 rng(19);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t a = 1 + rng() % 70, b = 1 + rng() % 70, c = 1 + rng() % 70, d = 1 + rng() % 9;
    const BitMatrix x = random_matrix(a, b, rng);
    const BitMatrix y = random_matrix(b, c, rng);
    const BitMatrix z = random_matrix(c, d, rng);
    CHECK(reference::to_dense(mat_mul(x, y)) == reference::mat_mul(reference::to_dense(x), reference::to_dense(y)));
    CHECK(mat_mul(mat_mul(x, y), z) == mat_mul(x, mat_mul(y, z)));
  }
}

TEST_CASE("exchange conjugation transposes G") {
  for (int n = 1; n <= 5; ++n) {
    const std::size_t len = std::size_t{1} << n;
    const BitMatrix j = BitMatrix::exchange(len);
    const BitMatrix g = BitMatrix::polar(n);
    CHECK(mat_mul(mat_mul(j, g), j) == g.transposed());
    CHECK(mat_mul(g, g) == BitMatrix::identity(len));
  }
}
