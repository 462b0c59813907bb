#include "modcartan/exactla/prime_field.hpp"

#include "modcartan/error.hpp"

namespace modcartan::la {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p > kMaxPrime || !is_prime(p))
    throw InvalidArgument("prime field characteristic must be a prime <= 61, got " +
                          std::to_string(p));
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
  Residue result = 1 % p_;
  Residue base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw InvalidArgument("inverse of zero in " + to_string());
  return pow(a, p_ - 2);
}

Residue PrimeField::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Residue>(r);
}

}  // namespace modcartan::la
