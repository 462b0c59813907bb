#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modcartan/exactla/fp_poly.hpp"
#include "modcartan/exactla/prime_field.hpp"

namespace modcartan::la {

using FpVector = std::vector<Residue>;

/// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FpMatrix identity(PrimeField field, std::size_t n);
  /// Entries are reduced mod p; rows must have equal length.
  static FpMatrix from_rows(PrimeField field,
                            const std::vector<std::vector<std::int64_t>>& rows,
                            std::size_t cols_if_empty = 0);
  static FpMatrix from_vectors(PrimeField field, const std::vector<FpVector>& rows,
                               std::size_t cols);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Residue operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }
  Residue& at(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Residue v) noexcept {
    data_[r * cols_ + c] = v % field_.p();
  }

  std::span<const Residue> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Residue> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  FpVector row_vector(std::size_t r) const { return FpVector(row(r).begin(), row(r).end()); }
  FpVector column_vector(std::size_t c) const;
  const std::vector<Residue>& data() const noexcept { return data_; }

  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  FpMatrix scaled(Residue c) const;
  FpMatrix transpose() const;
  /// this * v for a column vector v.
  FpVector apply(std::span<const Residue> v) const;
  /// Sub-block of rows [r0, r0+nr) and columns [c0, c0+nc).
  FpMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  bool is_zero() const noexcept;
  bool is_identity() const noexcept;

  /// Rows on separate lines, entries space separated, decimal residues.
  std::string to_string() const;

  friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_, cols_;
  std::vector<Residue> data_;
};

struct RrefResult {
  FpMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank;
};

RrefResult rref(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);
/// Basis of the right kernel {v : m v = 0}, one basis vector per row.
FpMatrix nullspace(const FpMatrix& m);
std::optional<FpMatrix> inverse(const FpMatrix& m);
/// Throws NonSquare.
FpPoly charpoly(const FpMatrix& m);
/// f(m) by Horner's rule; throws NonSquare.
FpMatrix evaluate(const FpPoly& f, const FpMatrix& m);
FpMatrix kronecker(const FpMatrix& a, const FpMatrix& b);
/// Block-diagonal sum.
FpMatrix direct_sum(const FpMatrix& a, const FpMatrix& b);

/// Incrementally built subspace of F_p^n kept in echelon form; answers
/// membership and produces a reduced basis on demand.
class Subspace {
 public:
  Subspace(PrimeField field, std::size_t ambient) : field_(field), ambient_(ambient) {}
  static Subspace spanned_by(PrimeField field, std::size_t ambient,
                             const std::vector<FpVector>& vectors);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }

  /// v minus its projection onto the echelon rows; zero iff v lies in the span.
  FpVector reduce(FpVector v) const;
  bool contains(const FpVector& v) const;
  /// Adds v; returns false if it was already in the span.
  bool insert(FpVector v);

  /// Reduced row echelon basis (rows) and pivot columns.
  RrefResult basis() const;

 private:
  PrimeField field_;
  std::size_t ambient_;
  std::vector<FpVector> rows_;          // sorted by pivot, each with leading 1
  std::vector<std::size_t> pivots_;
};

}  // namespace modcartan::la
