#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cob/bigint.hpp"

namespace cob {

/// Dense integer matrix with arbitrary-precision entries, stored row-major.
/// Zero-sized dimensions are legal and model maps to or from the trivial group.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix diagonal(std::span<const BigInt> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const BigInt> entries() const noexcept { return entries_; }
  std::span<const BigInt> row(std::size_t r) const {
    return std::span<const BigInt>(entries_).subspan(r * cols_, cols_);
  }

  IntegerMatrix transposed() const;
  IntegerMatrix operator*(const IntegerMatrix& rhs) const;
  IntegerMatrix operator-(const IntegerMatrix& rhs) const;
  IntegerMatrix operator+(const IntegerMatrix& rhs) const;
  IntegerMatrix pow(unsigned long exponent) const;

  bool is_zero() const;
  bool is_diagonal() const;
  /// Exact determinant by fraction-free (Bareiss) elimination; square only.
  BigInt determinant() const;

  bool operator==(const IntegerMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

}  // namespace cob
