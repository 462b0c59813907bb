#pragma once

#include <cstdint>
#include <string>

namespace modcartan::la {

using Residue = std::uint32_t;

bool is_prime(std::uint64_t n);

/// The prime field F_p for 2 <= p <= 61. Residues are canonical in [0, p).
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxPrime = 61;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  Residue add(Residue a, Residue b) const noexcept {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((std::uint64_t{a} * b) % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const noexcept;
  /// Throws InvalidArgument on zero.
  Residue inv(Residue a) const;
  Residue from_int(std::int64_t v) const noexcept;

  std::string to_string() const { return "F" + std::to_string(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace modcartan::la
