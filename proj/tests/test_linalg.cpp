#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "p1inv/linalg.hpp"

using namespace p1inv;

namespace {

RationalMatrix random_matrix(std::size_t rows, std::size_t cols, std::size_t target_rank, std::mt19937_64& rng) {
  // Product of random rows x r and r x cols integer matrices.
  RationalMatrix a(rows, target_rank);
  RationalMatrix b(target_rank, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < target_rank; ++k) a.at(i, k) = static_cast<long>(rng() % 9) - 4;
  for (std::size_t k = 0; k < target_rank; ++k)
    for (std::size_t j = 0; j < cols; ++j) {
      b.at(k, j) = Rational(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3);
      b.at(k, j).canonicalize();
    }
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < target_rank; ++k) m.at(i, j) += a.at(i, k) * b.at(k, j);
  return m;
}

std::vector<std::vector<mpq_class>> rows_of(const RationalMatrix& m) {
  std::vector<std::vector<mpq_class>> out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j);
  return out;
}

}  // namespace

TEST_CASE("rank") {
  CHECK(rank(RationalMatrix::identity(5)) == 5);
  CHECK(rank(RationalMatrix(3, 4)) == 0);
  RationalMatrix outer(3, 3);
  const Rational u[] = {1, -2, Rational(1, 3)};
  const Rational v[] = {4, 0, 5};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) outer.at(i, j) = u[i] * v[j];
  CHECK(rank(outer) == 1);
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(RationalMatrix::identity(4)).empty());
  RationalMatrix m(1, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(k[0][0] != 0);
}

TEST_CASE("in span") {
  RationalMatrix m(3, 2);
  m.at(0, 0) = 1;
  m.at(1, 0) = 2;
  m.at(0, 1) = 3;
  m.at(2, 1) = 1;
  const auto x = in_span({3, 0, 1}, m);
  REQUIRE(x.has_value());
  CHECK(*x == RationalVector{0, 1});
  const auto zero = in_span({0, 0, 0}, m);
  REQUIRE(zero.has_value());
  CHECK(*zero == RationalVector{0, 0});

  RationalMatrix one(2, 2);
  one.at(0, 0) = 1;
  one.at(1, 0) = 1;
  one.at(0, 1) = 2;
  one.at(1, 1) = 2;
  CHECK_FALSE(in_span({1, 0}, one).has_value());
  CHECK_ERROR_KIND(in_span({1, 2}, m), ErrorKind::DimensionMismatch);
}

TEST_CASE("random matrices: rank, kernel, certificates") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    const std::size_t rows = 1 + rng() % 7;
    const std::size_t cols = 1 + rng() % 7;
    const std::size_t r = rng() % (std::min(rows, cols) + 1);
    const RationalMatrix m = random_matrix(rows, cols, r, rng);
    const std::size_t k = rank(m);
    CHECK(k == oracle::rank(rows_of(m)));
    CHECK(k == rank(m.transpose()));
    const auto kernel = kernel_basis(m);
    CHECK(kernel.size() + k == cols);
    for (const auto& v : kernel) {
      for (const auto& entry : m.apply(v)) CHECK(entry == 0);
    }
    // A vector in the column space has a certificate that re-verifies.
    RationalVector x(cols);
    for (auto& e : x) e = static_cast<long>(rng() % 5) - 2;
    const RationalVector target = m.apply(x);
    const auto sol = in_span(target, m);
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == target);

    std::vector<SparseVector> columns(cols);
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t i = 0; i < rows; ++i)
        if (m.at(i, j) != 0) columns[j].emplace_back(i, m.at(i, j));
    SparseVector sparse_target;
    for (std::size_t i = 0; i < rows; ++i)
      if (target[i] != 0) sparse_target.emplace_back(i, target[i]);
    const auto sparse = in_span_sparse(sparse_target, columns, rows);
    REQUIRE(sparse.has_value());
    CHECK(m.apply(*sparse) == target);
  }
}

TEST_CASE("row echelon form") {
  std::vector<SparseVector> rows = {{{0, 2}, {2, 4}}, {{0, 1}, {2, 2}}, {{1, 3}}};
  const auto e = row_reduce(rows, 3);
  CHECK(e.pivot_columns.size() == 2);
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    CHECK(e.rows[i].front().first == e.pivot_columns[i]);
    CHECK(e.rows[i].front().second == 1);
  }
}
