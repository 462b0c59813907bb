#include "modcartan/exactla/chain_ring.hpp"

#include <array>
#include <regex>

#include "modcartan/error.hpp"

namespace modcartan::la {

namespace {
constexpr std::uint64_t kMaxRingSize = std::uint64_t{1} << 31;
}

ChainRing::ChainRing(ChainKind kind, std::uint32_t p, std::uint32_t length)
    : kind_(kind), p_(p), length_(length), size_(1) {
  PrimeField check(p);  // validates p
  if (length == 0) throw InvalidArgument("chain ring length must be at least 1");
  for (std::uint32_t i = 0; i < length; ++i) {
    size_ *= p;
    if (size_ > kMaxRingSize) throw InvalidArgument("chain ring too large (p^t must be < 2^31)");
  }
}

ChainRing::Elem ChainRing::add(Elem a, Elem b) const noexcept {
  if (kind_ == ChainKind::ZmodPN || length_ == 1) {
    const Elem s = a + b;
    return s >= size_ ? s - size_ : s;
  }
  Elem out = 0, place = 1;
  for (std::uint32_t i = 0; i < length_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

ChainRing::Elem ChainRing::sub(Elem a, Elem b) const noexcept {
  if (kind_ == ChainKind::ZmodPN || length_ == 1) return a >= b ? a - b : a + size_ - b;
  Elem out = 0, place = 1;
  for (std::uint32_t i = 0; i < length_; ++i) {
    out += ((a % p_ + p_ - b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

ChainRing::Elem ChainRing::mul(Elem a, Elem b) const noexcept {
  if (kind_ == ChainKind::ZmodPN || length_ == 1) return (a * b) % size_;
  std::array<std::uint64_t, 32> da{}, db{}, acc{};
  for (std::uint32_t i = 0; i < length_; ++i) {
    da[i] = a % p_;
    db[i] = b % p_;
    a /= p_;
    b /= p_;
  }
  for (std::uint32_t i = 0; i < length_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; i + j < length_; ++j) acc[i + j] += da[i] * db[j];
  }
  Elem out = 0, place = 1;
  for (std::uint32_t i = 0; i < length_; ++i) {
    out += (acc[i] % p_) * place;
    place *= p_;
  }
  return out;
}

std::uint32_t ChainRing::valuation(Elem a) const noexcept {
  if (a == 0) return length_;
  std::uint32_t v = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++v;
  }
  return v;
}

ChainRing::Elem ChainRing::unit_inverse(Elem a) const {
  if (!is_unit(a)) throw InvalidArgument("inverting a non-unit of " + to_string());
  // Newton iteration x <- x (2 - a x) doubles the u-adic precision each step.
  const PrimeField f(p_);
  Elem x = lift(f.inv(residue(a)));
  for (std::uint32_t prec = 1; prec < length_; prec *= 2)
    x = mul(x, sub(from_int(2), mul(a, x)));
  return x;
}

ChainRing::Elem ChainRing::uniformizer_pow(std::uint32_t k) const noexcept {
  if (k >= length_) return 0;
  Elem out = 1;
  for (std::uint32_t i = 0; i < k; ++i) out *= p_;
  return out;
}

ChainRing::Elem ChainRing::div_uniformizer_pow(Elem a, std::uint32_t k) const noexcept {
  if (k >= length_) return 0;
  return a / uniformizer_pow(k);
}

ChainRing::Elem ChainRing::mod_uniformizer_pow(Elem a, std::uint32_t k) const noexcept {
  if (k >= length_) return a;
  return a % uniformizer_pow(k);
}

ChainRing::Elem ChainRing::from_int(std::int64_t v) const noexcept {
  const std::int64_t m = (kind_ == ChainKind::ZmodPN) ? static_cast<std::int64_t>(size_)
                                                        : static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<Elem>(r);
}

ChainRing::Elem ChainRing::from_code(std::uint64_t code) const {
  if (code >= size_)
    throw InvalidArgument("element code " + std::to_string(code) + " out of range for " +
                          to_string());
  return code;
}

std::string ChainRing::to_string() const {
  const std::string ps = std::to_string(p_);
  if (length_ == 1) return "F" + ps;
  if (kind_ == ChainKind::ZmodPN) return "Z/" + ps + "^" + std::to_string(length_);
  return "F" + ps + "[t]/t^" + std::to_string(length_);
}

ChainRing parse_coeff_spec(const std::string& spec) {
  static const std::regex field(R"(F(\d+))");
  static const std::regex zmod(R"(Z/(\d+)(?:\^(\d+))?)");
  static const std::regex trunc(R"(F(\d+)\[([a-z])\]/\2\^(\d+))");
  auto number = [&](const std::string& s) -> std::uint32_t {
    if (s.size() > 9) throw SpecSyntaxError("number too large in coefficient spec '" + spec + "'");
    return static_cast<std::uint32_t>(std::stoul(s));
  };
  auto build = [&](ChainKind kind, std::uint32_t p, std::uint32_t t) {
    if (!is_prime(p)) throw SpecSyntaxError("coefficient spec '" + spec + "' needs a prime, got " + std::to_string(p));
    if (t == 0) throw SpecSyntaxError("coefficient spec '" + spec + "' has exponent 0");
    try {
      return ChainRing(kind, p, t);
    } catch (const InvalidArgument& e) {
      throw SpecSyntaxError(std::string(e.what()) + " in '" + spec + "'");
    }
  };
  std::smatch m;
  if (std::regex_match(spec, m, field)) return build(ChainKind::ZmodPN, number(m[1]), 1);
  if (std::regex_match(spec, m, zmod))
    return build(ChainKind::ZmodPN, number(m[1]), m[2].matched ? number(m[2]) : 1);
  if (std::regex_match(spec, m, trunc)) return build(ChainKind::TruncPoly, number(m[1]), number(m[3]));
  if (spec.find('x') != std::string::npos || spec.find('*') != std::string::npos)
    throw SpecSyntaxError("products of coefficient rings are not supported: '" + spec + "'");
  throw SpecSyntaxError("cannot parse coefficient spec '" + spec + "' (expected F<p>, Z/<p>^<n> or F<p>[t]/t^<m>)");
}

}  // namespace modcartan::la
