#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "modcartan/groupalg/group_algebra.hpp"
#include "modcartan/groups/subgroups.hpp"

namespace modcartan::alg {

enum class Sidedness { Left, Right, TwoSided };

/// An R-submodule of R[pi] spanned by the rows of a Howell form (a reduced
/// echelon basis over a field), with the sidedness that was verified for it.
class IdealBasis {
 public:
  IdealBasis(GroupAlgebra alg, la::RowSpan span, Sidedness side);

  const GroupAlgebra& algebra() const noexcept { return alg_; }
  const la::RowSpan& span() const noexcept { return span_; }
  Sidedness side() const noexcept { return side_; }
  /// Dimension over a field; composition length over a chain ring.
  std::size_t length() const { return span_.length(); }
  bool is_zero() const noexcept { return span_.is_zero(); }
  bool contains(const AlgElement& a) const { return span_.contains(a.coeffs()); }
  std::vector<AlgElement> generators() const;

  friend bool operator==(const IdealBasis& a, const IdealBasis& b) { return a.span_ == b.span_; }

 private:
  GroupAlgebra alg_;
  la::RowSpan span_;
  Sidedness side_;
};

/// R-span of the given elements; sidedness is determined by checking closure
/// under multiplication by the group generators on each side.
IdealBasis ideal_from_generators(const GroupAlgebra& alg, const std::vector<AlgElement>& gens);
bool is_left_closed(const IdealBasis& i);
bool is_right_closed(const IdealBasis& i);

/// I = sum over lambda in sub of (lambda - 1) R[pi] (right generated).
IdealBasis augmentation_ideal(const GroupAlgebra& alg, const grp::Subgroup& sub);
/// R-span of all products x y, x in a, y in b.
IdealBasis ideal_product(const IdealBasis& a, const IdealBasis& b);
/// Least d with I^d = 0, or nullopt if I^cap is still nonzero.
std::optional<std::size_t> nilpotency_index(const IdealBasis& i, std::size_t cap);

/// Jacobson radical of k[pi] over a prime field: the common kernel of all
/// simple representations. Throws InvalidArgument over chain rings.
IdealBasis radical(const GroupAlgebra& alg, std::uint64_t seed = 1);
/// rad(R[pi]) over a chain ring as the preimage of rad(k[pi]) under reduction.
IdealBasis radical_chain(const GroupAlgebra& alg, std::uint64_t seed = 1);

/// A primitive idempotent of A/J, represented by its canonical representative
/// in A, with the registry index of the simple module A/J e.
struct SemisimpleIdempotent {
  AlgElement element;
  std::size_t simple;
};
/// Complete orthogonal family of primitive idempotents of A/J (A over a prime
/// field). Representatives are reduced modulo J.
std::vector<SemisimpleIdempotent> semisimple_primitive_idempotents(const GroupAlgebra& alg,
                                                                   std::uint64_t seed = 1);

/// Exact idempotent e with e = ebar mod n, by e <- 3e^2 - 2e^3. Throws
/// NotApproxIdempotent if ebar^2 - ebar is not in n, InternalError if the
/// iteration does not settle (n not nilpotent).
AlgElement lift_idempotent(const AlgElement& ebar, const IdealBasis& n);

}  // namespace modcartan::alg
