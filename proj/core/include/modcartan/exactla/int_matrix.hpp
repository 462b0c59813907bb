#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace modcartan::la {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                             std::size_t cols_if_empty = 0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix scaled(const BigInt& c) const;
  IntMatrix transpose() const;
  /// Rows of `o` appended below.
  IntMatrix stacked(const IntMatrix& o) const;

  bool is_zero() const;
  bool is_diagonal() const;
  std::vector<std::vector<std::int64_t>> to_int64() const;
  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

/// Fraction-free (Bareiss) determinant; throws NonSquare.
BigInt determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix diag;   // diag = left * a * right
  IntMatrix left;   // unimodular, rows x rows
  IntMatrix right;  // unimodular, cols x cols
  std::size_t rank = 0;

  /// Nonzero diagonal entries d_1 | d_2 | ... (all positive).
  std::vector<BigInt> invariants() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Basis (rows) of {x in Z^rows : x a = 0}.
IntMatrix left_kernel(const IntMatrix& a);

}  // namespace modcartan::la
