#include "fiveclass/gf2.hpp"

#include <stdexcept>
#include <utility>

namespace fiveclass::gf2 {

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && !a(p, col)) ++p;
    if (p == a.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != row && a(i, col)) {
        for (std::size_t j = col; j < a.cols(); ++j) a(i, j) ^= a(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows,
                            const std::vector<std::vector<std::uint8_t>>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i] & 1;
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("shape mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!(*this)(i, k)) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) ^= other(k, j);
    }
  return out;
}

bool Matrix::is_zero() const {
  for (auto x : data_)
    if (x) return false;
  return true;
}

std::size_t Matrix::rank() const {
  Matrix a = *this;
  return row_reduce(a).size();
}

std::vector<std::vector<std::uint8_t>> Matrix::kernel() const {
  Matrix a = *this;
  const std::vector<std::size_t> pivots = row_reduce(a);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint8_t>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint8_t> v(cols_, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (a(r, free)) v[pivots[r]] = 1;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string Matrix::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) ? '1' : '0';
    s += '\n';
  }
  return s;
}

}  // namespace fiveclass::gf2
