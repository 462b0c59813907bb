#include "modcartan/exactla/fp_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "modcartan/error.hpp"

namespace modcartan::la {

FpMatrix FpMatrix::identity(PrimeField field, std::size_t n) {
  FpMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(PrimeField field,
                             const std::vector<std::vector<std::int64_t>>& rows,
                             std::size_t cols_if_empty) {
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  FpMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = field.from_int(rows[r][c]);
  }
  return m;
}

FpMatrix FpMatrix::from_vectors(PrimeField field, const std::vector<FpVector>& rows,
                                std::size_t cols) {
  FpMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("vector length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

FpVector FpMatrix::column_vector(std::size_t c) const {
  FpVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_ || !(field_ == o.field_))
    throw DimensionMismatch("matrix product shape mismatch");
  const std::uint64_t p = field_.p();
  FpMatrix out(field_, rows_, o.cols_);
  std::vector<std::uint64_t> acc(o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = data_[i * cols_ + k];
      if (a == 0) continue;
      const Residue* orow = o.data_.data() + k * o.cols_;
      for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += a * orow[j];
    }
    for (std::size_t j = 0; j < o.cols_; ++j) out.data_[i * o.cols_ + j] = acc[j] % p;
  }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  FpMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], o.data_[i]);
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  FpMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], o.data_[i]);
  return out;
}

FpMatrix FpMatrix::scaled(Residue c) const {
  FpMatrix out = *this;
  for (auto& x : out.data_) x = field_.mul(x, c);
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.data_[c * rows_ + r] = data_[r * cols_ + c];
  return out;
}

FpVector FpMatrix::apply(std::span<const Residue> v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
  FpVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    const Residue* mrow = data_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c) acc += std::uint64_t{mrow[c]} * v[c];
    out[r] = static_cast<Residue>(acc % field_.p());
  }
  return out;
}

FpMatrix FpMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  FpMatrix out(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out.at(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

bool FpMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Residue x) { return x == 0; });
}

bool FpMatrix::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1u : 0u)) return false;
  return true;
}

std::string FpMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out << ' ';
      out << (*this)(r, c);
    }
    out << '\n';
  }
  return out.str();
}

RrefResult rref(const FpMatrix& m) {
  const PrimeField& f = m.field();
  FpMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(r).begin());
    const Residue inv = f.inv(a(r, c));
    for (auto& x : a.row(r)) x = f.mul(x, inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const Residue factor = a(i, c);
      if (factor == 0) continue;
      auto dst = a.row(i);
      auto src = a.row(r);
      for (std::size_t j = c; j < a.cols(); ++j) dst[j] = f.sub(dst[j], f.mul(factor, src[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots), r};
}

std::size_t rank(const FpMatrix& m) { return rref(m).rank; }

FpMatrix nullspace(const FpMatrix& m) {
  const auto [red, pivots, rk] = rref(m);
  const PrimeField& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  FpMatrix basis(f, m.cols() - rk, m.cols());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis.at(out, free) = 1;
    for (std::size_t j = 0; j < rk; ++j) basis.at(out, pivots[j]) = f.neg(red(j, free));
    ++out;
  }
  return basis;
}

std::optional<FpMatrix> inverse(const FpMatrix& m) {
  if (!m.is_square()) throw NonSquare("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  FpMatrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m(r, c);
    aug.at(r, n + r) = 1;
  }
  auto red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] != n - 1) return std::nullopt;
  return red.reduced.block(0, n, n, n);
}

FpPoly charpoly(const FpMatrix& m) {
  if (!m.is_square()) throw NonSquare("characteristic polynomial of a non-square matrix");
  const PrimeField& f = m.field();
  const std::size_t n = m.rows();
  FpMatrix h = m;
  // Similarity transform to upper Hessenberg form.
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::size_t i = k;
    while (i < n && h(i, k - 1) == 0) ++i;
    if (i == n) continue;
    if (i != k) {
      std::swap_ranges(h.row(i).begin(), h.row(i).end(), h.row(k).begin());
      for (std::size_t r = 0; r < n; ++r) std::swap(h.at(r, i), h.at(r, k));
    }
    const Residue inv = f.inv(h(k, k - 1));
    for (std::size_t j = k + 1; j < n; ++j) {
      const Residue u = f.mul(h(j, k - 1), inv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h.at(j, c) = f.sub(h(j, c), f.mul(u, h(k, c)));
      for (std::size_t r = 0; r < n; ++r) h.at(r, k) = f.add(h(r, k), f.mul(u, h(r, j)));
    }
  }
  std::vector<FpPoly> p;
  p.reserve(n + 1);
  p.push_back(FpPoly::constant(f, 1));
  const FpPoly x = FpPoly::x(f);
  for (std::size_t k = 1; k <= n; ++k) {
    FpPoly next = (x - FpPoly::constant(f, h(k - 1, k - 1))) * p[k - 1];
    Residue t = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      t = f.mul(t, h(i, i - 1));
      if (t == 0) break;
      next = next - p[i - 1].scaled(f.mul(h(i - 1, k - 1), t));
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

FpMatrix evaluate(const FpPoly& poly, const FpMatrix& m) {
  if (!m.is_square()) throw NonSquare("polynomial evaluated at a non-square matrix");
  FpMatrix acc(m.field(), m.rows(), m.cols());
  for (int d = poly.degree(); d >= 0; --d) {
    acc = acc * m;
    const Residue c = poly.coeff(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < m.rows(); ++i) acc.at(i, i) = m.field().add(acc(i, i), c);
  }
  return acc;
}

FpMatrix kronecker(const FpMatrix& a, const FpMatrix& b) {
  const PrimeField& f = a.field();
  FpMatrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Residue x = a(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out.at(i * b.rows() + k, j * b.cols() + l) = f.mul(x, b(k, l));
    }
  return out;
}

FpMatrix direct_sum(const FpMatrix& a, const FpMatrix& b) {
  FpMatrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

Subspace Subspace::spanned_by(PrimeField field, std::size_t ambient,
                              const std::vector<FpVector>& vectors) {
  Subspace s(field, ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

FpVector Subspace::reduce(FpVector v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector outside ambient space");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Residue c = v[pivots_[i]];
    if (c == 0) continue;
    const auto& r = rows_[i];
    for (std::size_t j = pivots_[i]; j < ambient_; ++j) v[j] = field_.sub(v[j], field_.mul(c, r[j]));
  }
  return v;
}

bool Subspace::contains(const FpVector& v) const {
  const auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Residue x) { return x == 0; });
}

bool Subspace::insert(FpVector v) {
  v = reduce(std::move(v));
  std::size_t piv = 0;
  while (piv < ambient_ && v[piv] == 0) ++piv;
  if (piv == ambient_) return false;
  const Residue inv = field_.inv(v[piv]);
  for (auto& x : v) x = field_.mul(x, inv);
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

RrefResult Subspace::basis() const {
  return rref(FpMatrix::from_vectors(field_, rows_, ambient_));
}

}  // namespace modcartan::la
