#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modcartan/exactla/chain_ring.hpp"
#include "modcartan/exactla/fp_matrix.hpp"

namespace modcartan::la {

using ChainVector = std::vector<ChainRing::Elem>;

/// Dense row-major matrix over a chain ring.
class ChainMatrix {
 public:
  ChainMatrix(ChainRing ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static ChainMatrix identity(ChainRing ring, std::size_t n);
  /// Entries are encoded elements (see ChainRing); validated.
  static ChainMatrix from_codes(ChainRing ring, const std::vector<std::vector<std::uint64_t>>& rows,
                                std::size_t cols_if_empty = 0);
  static ChainMatrix from_vectors(ChainRing ring, const std::vector<ChainVector>& rows,
                                  std::size_t cols);
  /// Digit lift of an F_p matrix.
  static ChainMatrix lift(ChainRing ring, const FpMatrix& m);

  const ChainRing& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  ChainRing::Elem operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }
  ChainRing::Elem& at(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  std::span<const ChainRing::Elem> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  ChainVector row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }

  ChainMatrix operator*(const ChainMatrix& o) const;
  ChainMatrix operator+(const ChainMatrix& o) const;
  ChainMatrix operator-(const ChainMatrix& o) const;
  ChainMatrix scaled(ChainRing::Elem c) const;
  ChainMatrix transpose() const;
  ChainVector apply(std::span<const ChainRing::Elem> v) const;
  /// Entrywise reduction to the residue field.
  FpMatrix reduce() const;

  bool is_zero() const noexcept;
  std::string to_string() const;

  friend bool operator==(const ChainMatrix& a, const ChainMatrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  ChainRing ring_;
  std::size_t rows_, cols_;
  std::vector<ChainRing::Elem> data_;
};

/// Howell normal form of the row span: nonzero rows only, each row's leading
/// entry a power u^k of the uniformizer, entries above a leading u^k reduced
/// modulo u^k, and the Howell property (every span element vanishing in the
/// first j columns is a combination of rows whose leading column is >= j).
/// Two matrices have the same row span iff their Howell forms are equal.
ChainMatrix howell_form(const ChainMatrix& m);

/// A row span kept in Howell form, answering membership queries.
class RowSpan {
 public:
  RowSpan(ChainRing ring, std::size_t ambient);
  explicit RowSpan(const ChainMatrix& generators);
  RowSpan(ChainRing ring, std::size_t ambient, const std::vector<ChainVector>& generators);

  const ChainRing& ring() const noexcept { return form_.ring(); }
  std::size_t ambient_dim() const noexcept { return form_.cols(); }
  const ChainMatrix& form() const noexcept { return form_; }

  /// Canonical remainder of v modulo the span (zero iff v is in the span).
  ChainVector reduce(ChainVector v) const;
  bool contains(const ChainVector& v) const;
  bool contains(const RowSpan& other) const;
  /// Composition length of the span as an R-module (log_p of its size).
  std::size_t length() const;
  bool is_zero() const noexcept { return form_.rows() == 0; }

  /// Span with extra generators added.
  RowSpan extended(const std::vector<ChainVector>& more) const;

  friend bool operator==(const RowSpan& a, const RowSpan& b) { return a.form_ == b.form_; }

 private:
  ChainMatrix form_;
  std::vector<std::size_t> pivot_cols_;
  std::vector<std::uint32_t> pivot_vals_;
  void index();
};

/// Inverse over the chain ring; exists iff the reduction is invertible.
std::optional<ChainMatrix> inverse(const ChainMatrix& m);

/// Generators of {x : x m = 0} (left kernel) as a Howell-form row span.
RowSpan left_kernel(const ChainMatrix& m);

}  // namespace modcartan::la
