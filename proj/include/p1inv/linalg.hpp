#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "p1inv/rational.hpp"

namespace p1inv {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  /// Each input vector becomes one column; all must have length `rows`.
  static RationalMatrix from_columns(std::size_t rows, const std::vector<RationalVector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  /// Throws DimensionMismatch.
  RationalVector apply(const RationalVector& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Sparse vector: (index, nonzero value) pairs with strictly increasing index.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Reduced row echelon form of a matrix given by sparse rows. Pivot rows are
/// chosen sparsest-first to limit fill-in.
struct RowEchelon {
  std::vector<std::size_t> pivot_columns;
  std::vector<SparseVector> rows;  ///< rows[i] has a leading 1 at pivot_columns[i]
};

RowEchelon row_reduce(std::vector<SparseVector> rows, std::size_t cols);

std::size_t rank(const RationalMatrix& m);

/// Basis of {x : M x = 0}, one vector per free column.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// Some x with M x = v, or nullopt. Throws DimensionMismatch.
std::optional<RationalVector> in_span(const RationalVector& v, const RationalMatrix& m);

/// Sparse-column variant used for large, sparse spanning sets.
std::optional<RationalVector> in_span_sparse(const SparseVector& v,
                                             const std::vector<SparseVector>& columns,
                                             std::size_t rows);

}  // namespace p1inv
