#include "p1inv/linalg.hpp"

#include <algorithm>

#include "p1inv/error.hpp"

namespace p1inv {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows, const std::vector<RationalVector>& columns) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

RationalVector RationalMatrix::apply(const RationalVector& x) const {
  if (x.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "vector length");
  RationalVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn(at(r, c)) != 0 && sgn(x[c]) != 0) s += at(r, c) * x[c];
    }
    y[r] = s;
  }
  return y;
}

namespace {

const Rational* find_entry(const SparseVector& v, std::size_t col) {
  auto it = std::lower_bound(v.begin(), v.end(), col,
                             [](const auto& entry, std::size_t c) { return entry.first < c; });
  if (it != v.end() && it->first == col) return &it->second;
  return nullptr;
}

// target -= factor * pivot
void subtract_scaled(SparseVector& target, const Rational& factor, const SparseVector& pivot) {
  SparseVector out;
  out.reserve(target.size() + pivot.size());
  auto a = target.begin();
  auto b = pivot.begin();
  while (a != target.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != target.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == target.end() || b->first < a->first) {
      out.emplace_back(b->first, -factor * b->second);
      ++b;
    } else {
      Rational value = a->second - factor * b->second;
      if (sgn(value) != 0) out.emplace_back(a->first, std::move(value));
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

std::vector<SparseVector> sparse_rows(const RationalMatrix& m) {
  std::vector<SparseVector> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(m.at(r, c)) != 0) rows[r].emplace_back(c, m.at(r, c));
    }
  }
  return rows;
}

}  // namespace

RowEchelon row_reduce(std::vector<SparseVector> rows, std::size_t cols) {
  rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseVector& r) { return r.empty(); }),
             rows.end());
  RowEchelon result;
  std::vector<SparseVector> done;
  for (std::size_t col = 0; col < cols && !rows.empty(); ++col) {
    // Sparsest remaining row with a nonzero in this column becomes the pivot.
    std::size_t best = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i].empty() && rows[i].front().first == col &&
          (best == rows.size() || rows[i].size() < rows[best].size())) {
        best = i;
      }
    }
    if (best == rows.size()) continue;
    SparseVector pivot = std::move(rows[best]);
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
    const Rational lead = pivot.front().second;
    if (lead != 1) {
      for (auto& entry : pivot) entry.second /= lead;
    }
    // Remaining rows all start at or after `col`, so only their leading entry
    // can sit in this column.
    for (auto& row : rows) {
      if (!row.empty() && row.front().first == col) {
        const Rational factor = row.front().second;
        subtract_scaled(row, factor, pivot);
      }
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseVector& r) { return r.empty(); }),
               rows.end());
    for (auto& prior : done) {
      if (const Rational* entry = find_entry(prior, col)) {
        const Rational factor = *entry;
        subtract_scaled(prior, factor, pivot);
      }
    }
    result.pivot_columns.push_back(col);
    done.push_back(std::move(pivot));
  }
  result.rows = std::move(done);
  return result;
}

std::size_t rank(const RationalMatrix& m) {
  return row_reduce(sparse_rows(m), m.cols()).pivot_columns.size();
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const RowEchelon ech = row_reduce(sparse_rows(m), m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : ech.pivot_columns) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < ech.rows.size(); ++i) {
      if (const Rational* entry = find_entry(ech.rows[i], free)) v[ech.pivot_columns[i]] = -*entry;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> in_span_sparse(const SparseVector& v, const std::vector<SparseVector>& columns,
                                             std::size_t rows) {
  const std::size_t cols = columns.size();
  // Augmented system [M | v], built row-wise from the column data.
  std::vector<SparseVector> aug(rows);
  for (std::size_t c = 0; c < cols; ++c) {
    for (const auto& [r, value] : columns[c]) {
      if (r >= rows) throw Error(ErrorKind::DimensionMismatch, "column entry outside row range");
      aug[r].emplace_back(c, value);
    }
  }
  for (const auto& [r, value] : v) {
    if (r >= rows) throw Error(ErrorKind::DimensionMismatch, "vector entry outside row range");
    aug[r].emplace_back(cols, value);
  }
  const RowEchelon ech = row_reduce(std::move(aug), cols + 1);
  RationalVector x(cols);
  for (std::size_t i = 0; i < ech.rows.size(); ++i) {
    if (ech.pivot_columns[i] == cols) return std::nullopt;
    if (const Rational* rhs = find_entry(ech.rows[i], cols)) x[ech.pivot_columns[i]] = *rhs;
  }
  return x;
}

std::optional<RationalVector> in_span(const RationalVector& v, const RationalMatrix& m) {
  if (v.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "vector length vs rows");
  std::vector<SparseVector> columns(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(m.at(r, c)) != 0) columns[c].emplace_back(r, m.at(r, c));
    }
  }
  SparseVector sv;
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (sgn(v[r]) != 0) sv.emplace_back(r, v[r]);
  }
  return in_span_sparse(sv, columns, m.rows());
}

}  // namespace p1inv
