#include "modcartan/exactla/fp_poly.hpp"

#include <algorithm>
#include <sstream>

#include "modcartan/error.hpp"
#include "modcartan/exactla/fp_matrix.hpp"

namespace modcartan::la {

FpPoly::FpPoly(PrimeField field, std::vector<Residue> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= field_.p();
  trim();
}

FpPoly FpPoly::constant(PrimeField field, Residue c) { return FpPoly(field, {c}); }

FpPoly FpPoly::monomial(PrimeField field, Residue c, std::size_t degree) {
  std::vector<Residue> v(degree + 1, 0);
  v[degree] = c;
  return FpPoly(field, std::move(v));
}

void FpPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

FpPoly FpPoly::derivative() const {
  std::vector<Residue> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d.push_back(field_.mul(coeffs_[i], field_.from_int(static_cast<std::int64_t>(i))));
  return FpPoly(field_, std::move(d));
}

Residue FpPoly::evaluate(Residue at) const {
  Residue acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = field_.add(field_.mul(acc, at), *it);
  return acc;
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  std::vector<Residue> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_.add(coeff(i), o.coeff(i));
  return FpPoly(field_, std::move(c));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  std::vector<Residue> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_.sub(coeff(i), o.coeff(i));
  return FpPoly(field_, std::move(c));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
  if (is_zero() || o.is_zero()) return FpPoly(field_);
  std::vector<std::uint64_t> acc(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      acc[i + j] += std::uint64_t{coeffs_[i]} * o.coeffs_[j];
  std::vector<Residue> c(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) c[i] = static_cast<Residue>(acc[i] % field_.p());
  return FpPoly(field_, std::move(c));
}

FpPoly FpPoly::scaled(Residue c) const {
  std::vector<Residue> v = coeffs_;
  for (auto& x : v) x = field_.mul(x, c);
  return FpPoly(field_, std::move(v));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& divisor) const {
  if (divisor.is_zero()) throw ZeroPolynomial("polynomial division by zero");
  if (degree() < divisor.degree()) return {FpPoly(field_), *this};
  std::vector<Residue> rem = coeffs_;
  std::vector<Residue> quot(coeffs_.size() - divisor.coeffs_.size() + 1, 0);
  const Residue lead_inv = field_.inv(divisor.leading());
  const std::size_t dd = divisor.coeffs_.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Residue q = field_.mul(rem[k + dd], lead_inv);
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j)
      rem[k + j] = field_.sub(rem[k + j], field_.mul(q, divisor.coeffs_[j]));
  }
  rem.resize(dd);
  return {FpPoly(field_, std::move(quot)), FpPoly(field_, std::move(rem))};
}

std::string FpPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0 || coeffs_[i] != 1) out << coeffs_[i];
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

std::strong_ordering operator<=>(const FpPoly& a, const FpPoly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.coeffs_.size(); i-- > 0;)
    if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& modulus) {
  FpPoly result = FpPoly::constant(base.field(), 1) % modulus;
  FpPoly b = base % modulus;
  while (e) {
    if (e & 1) result = (result * b) % modulus;
    b = (b * b) % modulus;
    e >>= 1;
  }
  return result;
}

bool is_irreducible(const FpPoly& f) {
  if (f.degree() <= 0) return false;
  const FpPoly g = f.monic();
  const FpPoly x = FpPoly::x(f.field());
  FpPoly h = x % g;
  for (int i = 1; 2 * i <= g.degree(); ++i) {
    h = powmod(h, f.field().p(), g);
    if (!gcd(g, h - x).is_one()) return false;
  }
  return true;
}

namespace {

FpPoly pth_root(const FpPoly& f) {
  const std::uint32_t p = f.field().p();
  std::vector<Residue> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  return FpPoly(f.field(), std::move(c));
}

void squarefree_parts(const FpPoly& f, int mult, std::vector<PolyFactor>& out) {
  if (f.degree() <= 0) return;
  const FpPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree_parts(pth_root(f), mult * static_cast<int>(f.field().p()), out);
    return;
  }
  FpPoly c = gcd(f, d);
  FpPoly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    FpPoly y = gcd(w, c);
    FpPoly z = w / y;
    if (z.degree() > 0) out.push_back({z.monic(), i * mult});
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0)
    squarefree_parts(pth_root(c.monic()), mult * static_cast<int>(f.field().p()), out);
}

// Berlekamp splitting of a monic squarefree polynomial.
std::vector<FpPoly> berlekamp(const FpPoly& f) {
  const PrimeField& field = f.field();
  const std::size_t n = static_cast<std::size_t>(f.degree());
  if (n <= 1) return {f};

  // Row i holds x^(i p) mod f; g^p = g mod f iff coeffs(g) (Q - I) = 0.
  FpMatrix q(field, n, n);
  const FpPoly xp = powmod(FpPoly::x(field), field.p(), f);
  FpPoly row = FpPoly::constant(field, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) q.at(i, j) = row.coeff(j);
    row = (row * xp) % f;
  }
  for (std::size_t i = 0; i < n; ++i) q.at(i, i) = field.sub(q(i, i), 1);
  const FpMatrix kernel = nullspace(q.transpose());
  const std::size_t count = kernel.rows();

  std::vector<FpPoly> factors{f};
  for (std::size_t k = 0; k < kernel.rows() && factors.size() < count; ++k) {
    const FpPoly g(field, kernel.row_vector(k));
    if (g.degree() <= 0) continue;
    std::vector<FpPoly> next;
    for (const auto& h : factors) {
      if (h.degree() <= 1) {
        next.push_back(h);
        continue;
      }
      for (Residue s = 0; s < field.p(); ++s) {
        FpPoly d = gcd(h, g - FpPoly::constant(field, s));
        if (d.degree() > 0) next.push_back(std::move(d));
      }
    }
    factors = std::move(next);
  }
  if (factors.size() != count)
    throw InternalError("Berlekamp splitting produced an unexpected factor count");
  return factors;
}

}  // namespace

std::vector<PolyFactor> factor_poly(const FpPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("cannot factor the zero polynomial");
  std::vector<PolyFactor> parts;
  squarefree_parts(f.monic(), 1, parts);
  std::vector<PolyFactor> out;
  for (const auto& part : parts)
    for (auto& irr : berlekamp(part.factor)) out.push_back({irr.monic(), part.exponent});
  std::sort(out.begin(), out.end(),
            [](const PolyFactor& a, const PolyFactor& b) { return a.factor < b.factor; });
  return out;
}

}  // namespace modcartan::la
