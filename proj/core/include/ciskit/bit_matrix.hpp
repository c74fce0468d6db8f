#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ciskit/bit_vector.hpp"

namespace ciskit {

/// Row-major dense matrix over GF(2); each row is a packed BitVector.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t order);
  static BitMatrix from_rows(std::vector<BitVector> rows);
  /// Rows given as '0'/'1' strings of equal length.
  static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
  static BitMatrix from_strings(std::span<const std::string> rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows() == cols_; }

  const BitVector& row(std::size_t i) const { return rows_[i]; }
  BitVector& row(std::size_t i) { return rows_[i]; }
  std::span<const BitVector> row_span() const noexcept { return rows_; }

  bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool value = true) { rows_[i].set(j, value); }

  BitVector column(std::size_t j) const;
  BitMatrix transpose() const;
  /// Columns listed in `indices`, in that order.
  BitMatrix select_columns(std::span<const std::size_t> indices) const;
  /// Column j of the result is column perm[j] of this matrix.
  BitMatrix permute_columns(std::span<const std::size_t> perm) const;
  BitMatrix select_rows(std::span<const std::size_t> indices) const;
  /// Horizontal block (this | right).
  BitMatrix hconcat(const BitMatrix& right) const;
  /// Columns [begin, begin + count).
  BitMatrix column_block(std::size_t begin, std::size_t count) const;

  void swap_rows(std::size_t a, std::size_t b) { std::swap(rows_[a], rows_[b]); }
  void push_row(BitVector r);

  std::vector<std::string> to_strings() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

struct EchelonForm {
  BitMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of row i, increasing

  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Reduced row echelon form. Zero rows are kept at the bottom so the shape
/// of the input is preserved.
EchelonForm rref(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);

/// M^{-1}; throws Errc::Singular when rank(M) < order, Errc::DimensionMismatch
/// when M is not square.
BitMatrix invert(const BitMatrix& m);
bool determinant_nonzero(const BitMatrix& m);

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
/// A·v with v a column vector of length cols(A).
BitVector mat_vec(const BitMatrix& a, const BitVector& v);
/// v·A with v a row vector of length rows(A).
BitVector vec_mat(const BitVector& v, const BitMatrix& a);

/// Coefficients c with c·A = x, if any. The solution is unique when A has
/// full row rank.
std::optional<BitVector> solve_left(const BitMatrix& a, const BitVector& x);

/// Basis (as rows) of {v : M·v = 0}.
BitMatrix right_nullspace(const BitMatrix& m);

/// Square matrix whose row i is first_row cyclically shifted right by i.
BitMatrix circulant(const BitVector& first_row);

/// True when rows are linearly independent.
bool has_full_row_rank(const BitMatrix& m);

}  // namespace ciskit
