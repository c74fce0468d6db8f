#include "ciskit/bit_matrix.hpp"

#include <utility>

#include "ciskit/error.hpp"

namespace ciskit {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t order) {
  BitMatrix m(order, order);
  for (std::size_t i = 0; i < order; ++i) {
    m.set(i, i);
  }
  return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows) {
  BitMatrix m;
  if (!rows.empty()) {
    m.cols_ = rows.front().size();
    for (const auto& r : rows) {
      if (r.size() != m.cols_) {
        raise(Errc::DimensionMismatch, "rows of unequal length");
      }
    }
  }
  m.rows_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
  std::vector<BitVector> out;
  out.reserve(rows.size());
  for (auto r : rows) {
    out.push_back(BitVector::from_string(r));
  }
  return from_rows(std::move(out));
}

BitMatrix BitMatrix::from_strings(std::span<const std::string> rows) {
  std::vector<BitVector> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    out.push_back(BitVector::from_string(r));
  }
  return from_rows(std::move(out));
}

BitVector BitMatrix::column(std::size_t j) const {
  BitVector c(rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    if (get(i, j)) {
      c.set(i);
    }
  }
  return c;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (get(i, j)) {
        t.set(j, i);
      }
    }
  }
  return t;
}

BitMatrix BitMatrix::select_columns(std::span<const std::size_t> indices) const {
  BitMatrix out(rows(), indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] >= cols_) {
      raise(Errc::BadIndex, "column index out of range");
    }
    for (std::size_t i = 0; i < rows(); ++i) {
      if (get(i, indices[j])) {
        out.set(i, j);
      }
    }
  }
  return out;
}

BitMatrix BitMatrix::permute_columns(std::span<const std::size_t> perm) const {
  if (perm.size() != cols_) {
    raise(Errc::WrongSize, "permutation length differs from column count");
  }
  return select_columns(perm);
}

BitMatrix BitMatrix::select_rows(std::span<const std::size_t> indices) const {
  std::vector<BitVector> out;
  out.reserve(indices.size());
  for (auto i : indices) {
    if (i >= rows()) {
      raise(Errc::BadIndex, "row index out of range");
    }
    out.push_back(rows_[i]);
  }
  BitMatrix m(0, cols_);
  m.rows_ = std::move(out);
  return m;
}

BitMatrix BitMatrix::hconcat(const BitMatrix& right) const {
  if (rows() != right.rows()) {
    raise(Errc::DimensionMismatch, "hconcat: row counts differ");
  }
  BitMatrix out(0, cols_ + right.cols_);
  out.rows_.reserve(rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    out.rows_.push_back(rows_[i].concat(right.rows_[i]));
  }
  return out;
}

BitMatrix BitMatrix::column_block(std::size_t begin, std::size_t count) const {
  BitMatrix out(0, count);
  out.rows_.reserve(rows());
  for (const auto& r : rows_) {
    out.rows_.push_back(r.slice(begin, count));
  }
  return out;
}

void BitMatrix::push_row(BitVector r) {
  if (rows_.empty() && cols_ == 0) {
    cols_ = r.size();
  }
  if (r.size() != cols_) {
    raise(Errc::DimensionMismatch, "push_row: length mismatch");
  }
  rows_.push_back(std::move(r));
}

std::vector<std::string> BitMatrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows());
  for (const auto& r : rows_) {
    out.push_back(r.to_string());
  }
  return out;
}

EchelonForm rref(const BitMatrix& m) {
  EchelonForm e{m, {}};
  BitMatrix& a = e.reduced;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < a.rows() && !a.get(pivot, col)) {
      ++pivot;
    }
    if (pivot == a.rows()) {
      continue;
    }
    a.swap_rows(lead, pivot);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != lead && a.get(i, col)) {
        a.row(i) ^= a.row(lead);
      }
    }
    e.pivots.push_back(col);
    ++lead;
  }
  return e;
}

std::size_t rank(const BitMatrix& m) {
  // Forward elimination only; rows are consumed as pivots are found.
  std::vector<BitVector> rows(m.row_span().begin(), m.row_span().end());
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && !rows[pivot].get(col)) {
      ++pivot;
    }
    if (pivot == rows.size()) {
      continue;
    }
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i].get(col)) {
        rows[i] ^= rows[r];
      }
    }
    ++r;
  }
  return r;
}

bool has_full_row_rank(const BitMatrix& m) { return rank(m) == m.rows(); }

BitMatrix invert(const BitMatrix& m) {
  if (!m.is_square()) {
    raise(Errc::DimensionMismatch, "invert: matrix is not square");
  }
  const std::size_t n = m.rows();
  BitMatrix aug = m.hconcat(BitMatrix::identity(n));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !aug.get(pivot, col)) {
      ++pivot;
    }
    if (pivot == n) {
      raise(Errc::Singular, "matrix is singular");
    }
    aug.swap_rows(col, pivot);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != col && aug.get(i, col)) {
        aug.row(i) ^= aug.row(col);
      }
    }
  }
  return aug.column_block(n, n);
}

bool determinant_nonzero(const BitMatrix& m) {
  if (!m.is_square()) {
    raise(Errc::DimensionMismatch, "determinant: matrix is not square");
  }
  return rank(m) == m.rows();
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) {
    raise(Errc::DimensionMismatch, "mat_mul: inner dimensions differ");
  }
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.get(i, k)) {
        out.row(i) ^= b.row(k);
      }
    }
  }
  return out;
}

BitVector mat_vec(const BitMatrix& a, const BitVector& v) {
  if (a.cols() != v.size()) {
    raise(Errc::DimensionMismatch, "mat_vec: length mismatch");
  }
  BitVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a.row(i).dot(v)) {
      out.set(i);
    }
  }
  return out;
}

BitVector vec_mat(const BitVector& v, const BitMatrix& a) {
  if (a.rows() != v.size()) {
    raise(Errc::DimensionMismatch, "vec_mat: length mismatch");
  }
  BitVector out(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (v.get(i)) {
      out ^= a.row(i);
    }
  }
  return out;
}

std::optional<BitVector> solve_left(const BitMatrix& a, const BitVector& x) {
  if (a.cols() != x.size()) {
    raise(Errc::DimensionMismatch, "solve_left: length mismatch");
  }
  // Reduce the rows of A while tracking which original rows each reduced row
  // combines; then reduce x against the pivots.
  const std::size_t k = a.rows();
  std::vector<BitVector> rows(a.row_span().begin(), a.row_span().end());
  std::vector<BitVector> combo;
  combo.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    combo.push_back(BitVector::unit(k, i));
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < k; ++col) {
    std::size_t p = r;
    while (p < k && !rows[p].get(col)) {
      ++p;
    }
    if (p == k) {
      continue;
    }
    std::swap(rows[r], rows[p]);
    std::swap(combo[r], combo[p]);
    for (std::size_t i = 0; i < k; ++i) {
      if (i != r && rows[i].get(col)) {
        rows[i] ^= rows[r];
        combo[i] ^= combo[r];
      }
    }
    pivot_cols.push_back(col);
    ++r;
  }
  BitVector residual = x;
  BitVector c(k);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    if (residual.get(pivot_cols[i])) {
      residual ^= rows[i];
      c ^= combo[i];
    }
  }
  if (!residual.is_zero()) {
    return std::nullopt;
  }
  return c;
}

BitMatrix right_nullspace(const BitMatrix& m) {
  const EchelonForm e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) {
    is_pivot[p] = true;
  }
  BitMatrix basis(0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) {
      continue;
    }
    BitVector v(n);
    v.set(free);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      if (e.reduced.get(i, free)) {
        v.set(e.pivots[i]);
      }
    }
    basis.push_row(std::move(v));
  }
  return basis;
}

BitMatrix circulant(const BitVector& first_row) {
  const std::size_t n = first_row.size();
  BitMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (first_row.get(j)) {
        c.set(i, (i + j) % n);
      }
    }
  }
  return c;
}

}  // namespace ciskit
