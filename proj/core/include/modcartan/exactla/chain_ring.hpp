#pragma once

#include <cstdint>
#include <string>

#include "modcartan/exactla/prime_field.hpp"

namespace modcartan::la {

enum class ChainKind { ZmodPN, TruncPoly };

/// A finite chain ring: Z/p^t or F_p[u]/(u^t). Both have p^t elements, residue
/// field F_p, maximal ideal generated by a uniformizer (p or u) and length t.
///
/// Elements are encoded as integers in [0, p^t). For Z/p^t this is the residue
/// itself; for F_p[u]/(u^t) the base-p digits are the coefficients of
/// 1, u, u^2, ... With this encoding the uniformizer power u^k is the integer
/// p^k in both rings, the valuation is the number of trailing base-p zeros,
/// exact division by u^k is integer division by p^k and reduction modulo u^k is
/// the integer remainder mod p^k.
class ChainRing {
 public:
  using Elem = std::uint64_t;

  ChainRing(ChainKind kind, std::uint32_t p, std::uint32_t length);
  /// F_p as the length-one chain ring.
  static ChainRing field(std::uint32_t p) { return ChainRing(ChainKind::ZmodPN, p, 1); }

  ChainKind kind() const noexcept { return kind_; }
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t length() const noexcept { return length_; }
  std::uint64_t size() const noexcept { return size_; }
  bool is_field() const noexcept { return length_ == 1; }
  PrimeField residue_field() const { return PrimeField(p_); }

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept { return sub(0, a); }
  Elem mul(Elem a, Elem b) const noexcept;

  /// length() for zero.
  std::uint32_t valuation(Elem a) const noexcept;
  bool is_unit(Elem a) const noexcept { return a % p_ != 0; }
  /// Throws InvalidArgument for non-units.
  Elem unit_inverse(Elem a) const;

  /// u^k (zero once k >= length).
  Elem uniformizer_pow(std::uint32_t k) const noexcept;
  /// q with a = u^k q, for a of valuation >= k; q is taken in [0, p^(t-k)).
  Elem div_uniformizer_pow(Elem a, std::uint32_t k) const noexcept;
  /// Canonical remainder of a modulo the ideal (u^k).
  Elem mod_uniformizer_pow(Elem a, std::uint32_t k) const noexcept;

  /// Image in the residue field R/(u).
  Residue residue(Elem a) const noexcept { return static_cast<Residue>(a % p_); }
  /// Digit lift of a residue (a Teichmueller-free section of R -> F_p).
  Elem lift(Residue r) const noexcept { return r % p_; }
  /// Image of an integer under Z -> R.
  Elem from_int(std::int64_t v) const noexcept;
  /// Validates an encoded element (must be < size()).
  Elem from_code(std::uint64_t code) const;

  /// Textual form following the coefficient grammar: F3, Z/2^2, F3[t]/t^2.
  std::string to_string() const;

  /// Length-one rings of either kind are the same field.
  friend bool operator==(const ChainRing& a, const ChainRing& b) noexcept {
    return a.p_ == b.p_ && a.length_ == b.length_ && (a.length_ == 1 || a.kind_ == b.kind_);
  }

 private:
  ChainKind kind_;
  std::uint32_t p_;
  std::uint32_t length_;
  std::uint64_t size_;
};

/// Parses `F<p>`, `Z/<p>^<n>` (also `Z/<p>`) and `F<p>[t]/t^<m>`, e.g. F3,
/// Z/2^2, F3[t]/t^2. Throws SpecSyntaxError; products of rings are rejected.
ChainRing parse_coeff_spec(const std::string& spec);

}  // namespace modcartan::la
