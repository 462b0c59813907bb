#include "modcartan/exactla/int_matrix.hpp"

#include <sstream>

#include "modcartan/error.hpp"

namespace modcartan::la {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                               std::size_t cols_if_empty) {
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged integer matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("integer matrix product shape mismatch");
  IntMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += a * o(k, j);
    }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("integer matrix sum shape mismatch");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

IntMatrix IntMatrix::scaled(const BigInt& c) const {
  IntMatrix out = *this;
  for (auto& x : out.data_) x *= c;
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::stacked(const IntMatrix& o) const {
  if (rows_ != 0 && o.rows_ != 0 && cols_ != o.cols_)
    throw DimensionMismatch("stacking matrices with different column counts");
  IntMatrix out(rows_ + o.rows_, rows_ ? cols_ : o.cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(o.data_.begin(), o.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_int64() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c).convert_to<std::int64_t>();
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "") << (*this)(r, c);
    out << '\n';
  }
  return out.str();
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw NonSquare("determinant of a non-square integer matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(piv, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<BigInt> SmithForm::invariants() const {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(diag(i, i));
  return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}
// row_dst += factor * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& factor) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (m(src, c) != 0) m.at(dst, c) += factor * m(src, c);
}
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& factor) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m(r, src) != 0) m.at(r, dst) += factor * m(r, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix d = a;
  IntMatrix left = IntMatrix::identity(m);
  IntMatrix right = IntMatrix::identity(n);
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pi = t, pj = t;
    BigInt best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (d(i, j) != 0 && (!found || abs(d(i, j)) < best)) {
          found = true;
          best = abs(d(i, j));
          pi = i;
          pj = j;
        }
    if (!found) break;
    swap_rows(d, t, pi);
    swap_rows(left, t, pi);
    swap_cols(d, t, pj);
    swap_cols(right, t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        const BigInt q = d(i, t) / d(t, t);
        add_row(d, i, t, -q);
        add_row(left, i, t, -q);
        if (d(i, t) != 0) {
          swap_rows(d, t, i);
          swap_rows(left, t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        const BigInt q = d(t, j) / d(t, t);
        add_col(d, j, t, -q);
        add_col(right, j, t, -q);
        if (d(t, j) != 0) {
          swap_cols(d, t, j);
          swap_cols(right, t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Enforce d_t | every remaining entry.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            add_row(d, t, i, 1);
            add_row(left, t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (d(t, t) < 0) {
      add_row(d, t, t, -2);
      add_row(left, t, t, -2);
    }
  }
  return {std::move(d), std::move(left), std::move(right), t};
}

IntMatrix left_kernel(const IntMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  IntMatrix k(a.rows() - s.rank, a.rows());
  for (std::size_t i = s.rank; i < a.rows(); ++i)
    for (std::size_t c = 0; c < a.rows(); ++c) k.at(i - s.rank, c) = s.left(i, c);
  return k;
}

}  // namespace modcartan::la
