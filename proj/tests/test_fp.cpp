#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ggs/errors.hpp"
#include "ggs/fp.hpp"
#include "ggs/tuples.hpp"

using namespace ggs;

namespace {

FpMatrix random_matrix(unsigned p, std::size_t rows, std::size_t cols,
                       std::mt19937& rng) {
  FpMatrix m(p, rows, cols);
  std::uniform_int_distribution<unsigned> dist(0, p - 1);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m.set(r, c, dist(rng));
  return m;
}

std::vector<std::vector<unsigned>> nonzero_rows(const FpMatrix& m) {
  std::vector<std::vector<unsigned>> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<unsigned> row(m.cols());
    bool nonzero = false;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row[c] = m.at(r, c);
      nonzero |= row[c] != 0;
    }
    if (nonzero)
      rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace

TEST_CASE("field arithmetic is exact and canonical") {
  Fp f(7);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.reduce(-13) == 1);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  for (unsigned a = 1; a < 7; ++a)
    CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK_THROWS_AS(Fp(9), usage_error);
  CHECK_THROWS_AS(Fp(2), usage_error);
}

TEST_CASE("row_reduce fixed points") {
  FpMatrix zero(5, 3, 4);
  CHECK(row_reduce(zero) == zero);
  FpMatrix id = FpMatrix::identity(5, 4);
  CHECK(row_reduce(id) == id);
}

TEST_CASE("row_reduce is idempotent") {
  std::mt19937 rng(1);
  for (unsigned p : {3u, 5u, 7u})
    for (int trial = 0; trial < 20; ++trial) {
      FpMatrix m = random_matrix(p, 4, 6, rng);
      FpMatrix r = row_reduce(m);
      CHECK(row_reduce(r) == r);
    }
}

TEST_CASE("second symmetry matrix reduces to its closed companion") {
  for (unsigned p : {5u, 7u, 11u}) {
    FpMatrix lhs = row_reduce(second_symmetry_matrix(p));
    FpMatrix rhs = row_reduce(second_symmetry_matrix_reduced(p));
    CHECK(nonzero_rows(lhs) == nonzero_rows(rhs));
  }
}

TEST_CASE("rank basics") {
  CHECK(rank(FpMatrix(3, 4, 4)) == 0);
  CHECK(rank(FpMatrix::identity(5, 5)) == 5);
  // all-ones circulant over F_3 has equal rows
  FpMatrix ones = FpMatrix::from_rows(3, {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  CHECK(rank(ones) == 1);
}

TEST_CASE("kernel basics") {
  CHECK(kernel_basis(FpMatrix::identity(5, 4)).empty());
  CHECK(kernel_basis(FpMatrix(3, 2, 2)).size() == 2);
}

TEST_CASE("kernel of the symmetry matrix is exactly the symmetric tuples") {
  const unsigned p = 5;
  FpMatrix m = symmetry_matrix(p);
  auto basis = kernel_basis(m);
  CHECK(basis.size() == 2);
  // enumerate all of F_5^4 and compare the predicate with span membership
  for (unsigned a = 0; a < p; ++a)
    for (unsigned b = 0; b < p; ++b)
      for (unsigned c = 0; c < p; ++c)
        for (unsigned d = 0; d < p; ++d) {
          std::vector<unsigned> v{a, b, c, d};
          bool symmetric = a == d && b == c;
          CHECK(in_span(p, basis, v) == symmetric);
        }
}

TEST_CASE("kernel vectors solve the system and complete the rank") {
  std::mt19937 rng(1);
  for (unsigned p : {3u, 5u, 7u})
    for (int trial = 0; trial < 30; ++trial) {
      FpMatrix m = random_matrix(p, 3, 5, rng);
      auto basis = kernel_basis(m);
      CHECK(rank(m) + basis.size() == m.cols());
      for (const auto& v : basis) {
        auto image = m.apply(v);
        for (unsigned entry : image)
          CHECK(entry == 0);
      }
    }
}

TEST_CASE("binomial coefficients mod p") {
  CHECK(binomial_mod(4, 2, 3) == 0);
  CHECK(binomial_mod(7, 3, 5) == 0);
  CHECK(binomial_mod(9, 10, 7) == 0); // k > n
  for (unsigned n = 0; n < 20; ++n)
    CHECK(binomial_mod(n, 0, 5) == 1);
}

TEST_CASE("binomials satisfy the Pascal recurrence") {
  for (unsigned p : {3u, 5u, 7u}) {
    Fp f(p);
    for (unsigned n = 1; n <= 3 * p; ++n)
      for (unsigned k = 1; k <= 3 * p; ++k)
        CHECK(binomial_mod(n, k, p) ==
              f.add(binomial_mod(n - 1, k, p), binomial_mod(n - 1, k - 1, p)));
  }
}
