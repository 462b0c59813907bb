#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "modcartan/exactla/prime_field.hpp"

namespace modcartan::la {

/// Univariate polynomial over F_p, coefficients lowest degree first.
/// The zero polynomial has an empty coefficient vector.
class FpPoly {
 public:
  explicit FpPoly(PrimeField field) : field_(field) {}
  FpPoly(PrimeField field, std::vector<Residue> coeffs);

  static FpPoly constant(PrimeField field, Residue c);
  static FpPoly monomial(PrimeField field, Residue c, std::size_t degree);
  static FpPoly x(PrimeField field) { return monomial(field, 1, 1); }

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<Residue>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Residue coeff(std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }
  Residue leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }

  FpPoly monic() const;
  FpPoly derivative() const;
  Residue evaluate(Residue at) const;

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly scaled(Residue c) const;

  /// Euclidean division; throws ZeroPolynomial for a zero divisor.
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& divisor) const;
  FpPoly operator/(const FpPoly& o) const { return divmod(o).first; }
  FpPoly operator%(const FpPoly& o) const { return divmod(o).second; }

  std::string to_string() const;

  friend bool operator==(const FpPoly& a, const FpPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }
  /// Deterministic total order: by degree, then coefficients from the top down.
  friend std::strong_ordering operator<=>(const FpPoly& a, const FpPoly& b);

 private:
  void trim();

  PrimeField field_;
  std::vector<Residue> coeffs_;
};

/// Monic gcd (zero only when both inputs are zero).
FpPoly gcd(const FpPoly& a, const FpPoly& b);
/// base^e mod modulus.
FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& modulus);

/// Rabin-style irreducibility test: f has no factor of degree <= deg f / 2.
bool is_irreducible(const FpPoly& f);

struct PolyFactor {
  FpPoly factor;  // monic irreducible
  int exponent;
};

/// Complete factorisation into monic irreducibles (squarefree decomposition
/// followed by Berlekamp splitting). Ordered by degree, then coefficients.
/// The leading coefficient of f is dropped; throws ZeroPolynomial on f = 0.
std::vector<PolyFactor> factor_poly(const FpPoly& f);

}  // namespace modcartan::la
