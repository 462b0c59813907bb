#include "modcartan/exactla/chain_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "modcartan/error.hpp"

namespace modcartan::la {

ChainMatrix ChainMatrix::identity(ChainRing ring, std::size_t n) {
  ChainMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ChainMatrix ChainMatrix::from_codes(ChainRing ring,
                                    const std::vector<std::vector<std::uint64_t>>& rows,
                                    std::size_t cols_if_empty) {
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  ChainMatrix m(ring, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = ring.from_code(rows[r][c]);
  }
  return m;
}

ChainMatrix ChainMatrix::from_vectors(ChainRing ring, const std::vector<ChainVector>& rows,
                                      std::size_t cols) {
  ChainMatrix m(ring, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("vector length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

ChainMatrix ChainMatrix::lift(ChainRing ring, const FpMatrix& m) {
  if (m.field().p() != ring.p()) throw InvalidArgument("lifting across characteristics");
  ChainMatrix out(ring, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = ring.lift(m(r, c));
  return out;
}

ChainMatrix ChainMatrix::operator*(const ChainMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("chain matrix product shape mismatch");
  ChainMatrix out(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const auto b = o(k, j);
        if (b != 0) out.at(i, j) = ring_.add(out(i, j), ring_.mul(a, b));
      }
    }
  return out;
}

ChainMatrix ChainMatrix::operator+(const ChainMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("chain matrix sum shape mismatch");
  ChainMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = ring_.add(data_[i], o.data_[i]);
  return out;
}

ChainMatrix ChainMatrix::operator-(const ChainMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("chain matrix difference shape mismatch");
  ChainMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = ring_.sub(data_[i], o.data_[i]);
  return out;
}

ChainMatrix ChainMatrix::scaled(ChainRing::Elem c) const {
  ChainMatrix out = *this;
  for (auto& x : out.data_) x = ring_.mul(x, c);
  return out;
}

ChainMatrix ChainMatrix::transpose() const {
  ChainMatrix out(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = (*this)(r, c);
  return out;
}

ChainVector ChainMatrix::apply(std::span<const ChainRing::Elem> v) const {
  if (v.size() != cols_) throw DimensionMismatch("chain matrix-vector shape mismatch");
  ChainVector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto a = (*this)(r, c);
      if (a != 0 && v[c] != 0) out[r] = ring_.add(out[r], ring_.mul(a, v[c]));
    }
  return out;
}

FpMatrix ChainMatrix::reduce() const {
  FpMatrix out(ring_.residue_field(), rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = ring_.residue((*this)(r, c));
  return out;
}

bool ChainMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](auto x) { return x == 0; });
}

std::string ChainMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "") << (*this)(r, c);
    out << '\n';
  }
  return out.str();
}

namespace {

bool is_zero_vec(const ChainVector& v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

// v -= q * w
void sub_multiple(const ChainRing& ring, ChainVector& v, const ChainVector& w,
                  ChainRing::Elem q, std::size_t from) {
  if (q == 0) return;
  for (std::size_t j = from; j < v.size(); ++j)
    if (w[j] != 0) v[j] = ring.sub(v[j], ring.mul(q, w[j]));
}

}  // namespace

ChainMatrix howell_form(const ChainMatrix& m) {
  const ChainRing& ring = m.ring();
  const std::uint32_t t = ring.length();
  const std::size_t cols = m.cols();

  std::vector<ChainVector> pending;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto v = m.row_vector(r);
    if (!is_zero_vec(v)) pending.push_back(std::move(v));
  }

  std::vector<ChainVector> rows;
  std::vector<std::size_t> pcols;
  std::vector<std::uint32_t> pvals;
  for (std::size_t c = 0; c < cols && !pending.empty(); ++c) {
    std::size_t best = pending.size();
    std::uint32_t best_val = t;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      const auto v = ring.valuation(pending[i][c]);
      if (v < best_val) {
        best_val = v;
        best = i;
      }
    }
    if (best == pending.size()) continue;

    ChainVector piv = std::move(pending[best]);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    const auto unit = ring.div_uniformizer_pow(piv[c], best_val);
    const auto unit_inv = ring.unit_inverse(unit);
    for (std::size_t j = c; j < cols; ++j) piv[j] = ring.mul(piv[j], unit_inv);

    std::vector<ChainVector> next;
    next.reserve(pending.size() + 1);
    for (auto& r : pending) {
      if (r[c] != 0) sub_multiple(ring, r, piv, ring.div_uniformizer_pow(r[c], best_val), c);
      if (!is_zero_vec(r)) next.push_back(std::move(r));
    }
    if (best_val > 0) {
      ChainVector extra(cols, 0);
      const auto ann = ring.uniformizer_pow(t - best_val);
      for (std::size_t j = c; j < cols; ++j) extra[j] = ring.mul(piv[j], ann);
      if (!is_zero_vec(extra)) next.push_back(std::move(extra));
    }
    pending = std::move(next);
    rows.push_back(std::move(piv));
    pcols.push_back(c);
    pvals.push_back(best_val);
  }

  // Reduce entries above each leading u^k modulo u^k.
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const auto a = rows[j][pcols[i]];
      if (a == 0) continue;
      sub_multiple(ring, rows[j], rows[i], ring.div_uniformizer_pow(a, pvals[i]), pcols[i]);
    }
  return ChainMatrix::from_vectors(ring, rows, cols);
}

RowSpan::RowSpan(ChainRing ring, std::size_t ambient) : form_(ring, 0, ambient) {}

RowSpan::RowSpan(const ChainMatrix& generators) : form_(howell_form(generators)) { index(); }

RowSpan::RowSpan(ChainRing ring, std::size_t ambient, const std::vector<ChainVector>& generators)
    : RowSpan(ChainMatrix::from_vectors(ring, generators, ambient)) {}

void RowSpan::index() {
  pivot_cols_.clear();
  pivot_vals_.clear();
  for (std::size_t r = 0; r < form_.rows(); ++r) {
    std::size_t c = 0;
    while (form_(r, c) == 0) ++c;
    pivot_cols_.push_back(c);
    pivot_vals_.push_back(form_.ring().valuation(form_(r, c)));
  }
}

ChainVector RowSpan::reduce(ChainVector v) const {
  if (v.size() != form_.cols()) throw DimensionMismatch("vector outside ambient module");
  const ChainRing& ring = form_.ring();
  for (std::size_t i = 0; i < form_.rows(); ++i) {
    const auto a = v[pivot_cols_[i]];
    if (a == 0) continue;
    const auto q = ring.div_uniformizer_pow(a, pivot_vals_[i]);
    if (q == 0) continue;
    const auto row = form_.row(i);
    for (std::size_t j = pivot_cols_[i]; j < v.size(); ++j)
      if (row[j] != 0) v[j] = ring.sub(v[j], ring.mul(q, row[j]));
  }
  return v;
}

bool RowSpan::contains(const ChainVector& v) const { return is_zero_vec(reduce(v)); }

bool RowSpan::contains(const RowSpan& other) const {
  for (std::size_t r = 0; r < other.form_.rows(); ++r)
    if (!contains(other.form_.row_vector(r))) return false;
  return true;
}

std::size_t RowSpan::length() const {
  std::size_t total = 0;
  for (auto k : pivot_vals_) total += form_.ring().length() - k;
  return total;
}

RowSpan RowSpan::extended(const std::vector<ChainVector>& more) const {
  std::vector<ChainVector> gens;
  for (std::size_t r = 0; r < form_.rows(); ++r) gens.push_back(form_.row_vector(r));
  gens.insert(gens.end(), more.begin(), more.end());
  return RowSpan(form_.ring(), form_.cols(), gens);
}

RowSpan left_kernel(const ChainMatrix& m) {
  const ChainRing& ring = m.ring();
  const std::size_t n = m.rows(), k = m.cols();
  ChainMatrix aug(ring, n, k + n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) aug.at(r, c) = m(r, c);
    aug.at(r, k + r) = 1;
  }
  const ChainMatrix h = howell_form(aug);
  std::vector<ChainVector> kernel;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    bool leading_zero = true;
    for (std::size_t c = 0; c < k && leading_zero; ++c) leading_zero = h(r, c) == 0;
    if (!leading_zero) continue;
    kernel.emplace_back(h.row(r).begin() + static_cast<std::ptrdiff_t>(k), h.row(r).end());
  }
  return RowSpan(ring, n, kernel);
}

std::optional<ChainMatrix> inverse(const ChainMatrix& m) {
  if (m.rows() != m.cols()) throw NonSquare("inverse of a non-square matrix");
  const ChainRing& r = m.ring();
  const std::size_t n = m.rows();
  ChainMatrix a = m, inv = ChainMatrix::identity(r, n);
  auto swap_rows = [n](ChainMatrix& x, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(x.at(i, c), x.at(j, c));
  };
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && !r.is_unit(a(piv, col))) ++piv;
    if (piv == n) return std::nullopt;
    swap_rows(a, col, piv);
    swap_rows(inv, col, piv);
    const auto s = r.unit_inverse(a(col, col));
    for (std::size_t c = 0; c < n; ++c) {
      a.at(col, c) = r.mul(a(col, c), s);
      inv.at(col, c) = r.mul(inv(col, c), s);
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a(row, col) == 0) continue;
      const auto f = a(row, col);
      for (std::size_t c = 0; c < n; ++c) {
        a.at(row, c) = r.sub(a(row, c), r.mul(f, a(col, c)));
        inv.at(row, c) = r.sub(inv(row, c), r.mul(f, inv(col, c)));
      }
    }
  }
  return inv;
}

}  // namespace modcartan::la
