#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fiveclass::gf2 {

// Dense matrix over F_2, one byte per entry. The matrices here are at most
// a few hundred entries on a side.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (each of length `rows`).
  static Matrix from_columns(std::size_t rows,
                             const std::vector<std::vector<std::uint8_t>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint8_t operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  std::uint8_t& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  void flip(std::size_t i, std::size_t j) { data_[i * cols_ + j] ^= 1; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  bool is_zero() const;

  std::size_t rank() const;
  /// Basis of {x : A x = 0}, each vector of length cols().
  std::vector<std::vector<std::uint8_t>> kernel() const;

  std::string to_string() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

}  // namespace fiveclass::gf2
