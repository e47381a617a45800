#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "drs/gf.hpp"

namespace drs {

/// Dense row-major matrix of field elements.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Throws DimensionMismatch on ragged input.
  static Matrix from_rows(const std::vector<std::vector<Element>>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Element> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<Element> column(std::size_t c) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

Matrix transpose(const Matrix& a);
/// Throws DimensionMismatch unless a.cols() == b.rows().
Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b);
/// Row vector times matrix.
std::vector<Element> vec_mul(const Field& f, std::span<const Element> v, const Matrix& a);

struct EchelonForm {
  Matrix reduced;                 // row echelon form, pivot entries scaled to 1
  std::vector<std::size_t> pivots;  // ascending pivot columns; size == rank
};

/// Gaussian elimination. Columns are scanned left to right and the pivot row
/// is the first row (top to bottom) with a nonzero entry in that column.
EchelonForm row_echelon_pivots(const Field& f, const Matrix& a);
std::size_t rank(const Field& f, const Matrix& a);
/// Throws DimensionMismatch for non-square input, Singular if not invertible.
Matrix invert(const Field& f, const Matrix& a);
/// One solution of a x = b with free variables set to zero, or nullopt if the
/// system is inconsistent.
std::optional<std::vector<Element>> solve(const Field& f, const Matrix& a,
                                          std::span<const Element> b);
/// Throws IndexOutOfRange for a bad column index.
Matrix select_columns(const Matrix& a, std::span<const std::size_t> idx);

}  // namespace drs
