#include "drs/matrix.hpp"

#include <string>
#include <utility>

#include "drs/error.hpp"

namespace drs {

Matrix Matrix::from_rows(const std::vector<std::vector<Element>>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) {
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    }
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Element(1);
  return m;
}

std::vector<Element> Matrix::column(std::size_t c) const {
  std::vector<Element> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
  return t;
}

Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "cannot multiply " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                    "x" + std::to_string(b.cols()));
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Element s = a(i, l);
      if (s.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += f.mul(s, b(l, j));
    }
  }
  return out;
}

std::vector<Element> vec_mul(const Field& f, std::span<const Element> v, const Matrix& a) {
  if (v.size() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "vector length " + std::to_string(v.size()) +
                                                  " does not match " +
                                                  std::to_string(a.rows()) + " rows");
  }
  std::vector<Element> out(a.cols());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += f.mul(v[i], a(i, j));
  }
  return out;
}

EchelonForm row_echelon_pivots(const Field& f, const Matrix& a) {
  EchelonForm ef{a, {}};
  Matrix& m = ef.reduced;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < m.cols() && next_row < m.rows(); ++col) {
    std::size_t pivot = next_row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;

    if (pivot != next_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(next_row, c));
    }
    const Element scale = f.inv(m(next_row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(next_row, c) = f.mul(m(next_row, c), scale);

    for (std::size_t r = next_row + 1; r < m.rows(); ++r) {
      const Element factor = m(r, col);
      if (factor.is_zero()) continue;
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f.mul(factor, m(next_row, c));
    }
    ef.pivots.push_back(col);
    ++next_row;
  }
  return ef;
}

std::size_t rank(const Field& f, const Matrix& a) {
  return row_echelon_pivots(f, a).pivots.size();
}

Matrix invert(const Field& f, const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot invert a non-square matrix");
  }
  const std::size_t n = a.rows();
  // Gauss-Jordan on [A | I].
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = Element(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && aug(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw Error(ErrorCode::Singular, "matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < 2 * n; ++c) std::swap(aug(pivot, c), aug(col, c));
    }
    const Element scale = f.inv(aug(col, col));
    for (std::size_t c = 0; c < 2 * n; ++c) aug(col, c) = f.mul(aug(col, c), scale);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Element factor = aug(r, col);
      if (factor.is_zero()) continue;
      for (std::size_t c = 0; c < 2 * n; ++c) aug(r, c) -= f.mul(factor, aug(col, c));
    }
  }
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

std::optional<std::vector<Element>> solve(const Field& f, const Matrix& a,
                                          std::span<const Element> b) {
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  }
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const EchelonForm ef = row_echelon_pivots(f, aug);
  if (!ef.pivots.empty() && ef.pivots.back() == n) return std::nullopt;

  std::vector<Element> x(n);
  for (std::size_t i = ef.pivots.size(); i-- > 0;) {
    const std::size_t p = ef.pivots[i];
    Element acc = ef.reduced(i, n);
    for (std::size_t c = p + 1; c < n; ++c) acc -= f.mul(ef.reduced(i, c), x[c]);
    x[p] = acc;
  }
  return x;
}

Matrix select_columns(const Matrix& a, std::span<const std::size_t> idx) {
  Matrix out(a.rows(), idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= a.cols()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "column " + std::to_string(idx[j]) + " out of range");
    }
    for (std::size_t r = 0; r < a.rows(); ++r) out(r, j) = a(r, idx[j]);
  }
  return out;
}

}  // namespace drs
