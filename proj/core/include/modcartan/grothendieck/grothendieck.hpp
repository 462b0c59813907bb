#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modcartan/exactla/int_matrix.hpp"
#include "modcartan/modrep/modular_algebra.hpp"

namespace modcartan::gk {

using la::BigInt;
using la::IntMatrix;

enum class LatticeKind { K0, G0 };

/// K0 (basis: PIMs) or G0 (basis: simples) of k[pi], in canonical registry
/// order; index i of K0 is the PIM whose head is simple i of G0.
struct Lattice {
  LatticeKind kind;
  std::string algebra;             // e.g. "F3[S3]"
  std::vector<std::size_t> dims;   // dimension of each basis module

  std::size_t rank() const noexcept { return dims.size(); }
};

Lattice g0_lattice(const rep::ModularAlgebra& a);
Lattice k0_lattice(const rep::ModularAlgebra& a);

/// A homomorphism of lattices in row convention: row i is the image of
/// domain basis element i in codomain coordinates.
struct LatticeMap {
  Lattice domain;
  Lattice codomain;
  IntMatrix matrix;

  /// Throws DimensionMismatch if the matrix shape does not fit.
  LatticeMap(Lattice dom, Lattice cod, IntMatrix m);
  /// this followed by `next`.
  LatticeMap then(const LatticeMap& next) const;
};

/// K0 -> G0; row i is the composition multiset of P_i.
LatticeMap cartan_matrix(const grp::GroupPtr& g, std::uint32_t p, std::uint64_t seed = 1);

struct CartanInjectivity {
  BigInt det;
  bool injective;
};
CartanInjectivity cartan_injectivity(const LatticeMap& cartan);
CartanInjectivity cartan_injectivity(const grp::GroupPtr& g, std::uint32_t p, std::uint64_t seed = 1);

/// G0(k pi) -> G0(k sub); row j is the chop of S_j restricted to sub.
LatticeMap restriction_map(const grp::Subgroup& sub, std::uint32_t p, std::uint64_t seed = 1);
/// G0(k sub) -> G0(k pi); row j is the chop of the induced S'_j.
LatticeMap induction_map(const grp::Subgroup& sub, std::uint32_t p, std::uint64_t seed = 1);
/// K0(k pi) -> K0(k sub); row i decomposes P_i restricted to sub.
LatticeMap k0_restriction_map(const grp::Subgroup& sub, std::uint32_t p, std::uint64_t seed = 1);

/// Module with composition multiset `coords` (a direct sum of simples).
rep::RepModule realize(const rep::ModularAlgebra& a, const std::vector<int>& coords);

struct FrobeniusSample {
  std::vector<int> x;  // in G0(k sub)
  std::vector<int> y;  // in G0(k pi)
  rep::CompositionMultiset lhs;  // (x induced) tensor y
  rep::CompositionMultiset rhs;  // (x tensor y restricted) induced
  bool pass = false;
};
struct FrobeniusReport {
  std::vector<FrobeniusSample> samples;
  bool pass = true;
};
/// Checks the projection formula on `samples` nonnegative pairs (the first is
/// trivial/trivial); pairs whose modules would exceed `max_dim` are resampled.
FrobeniusReport frobenius_identity_check(const grp::Subgroup& sub, std::uint32_t p, std::size_t samples,
                                         std::uint64_t seed = 1, std::size_t max_dim = 48);

struct ArtinResult {
  std::vector<BigInt> invariants;  // of the stacked induction matrix
  std::size_t free_rank = 0;       // rank of the cokernel's free part
  BigInt exponent;                 // 0 when the cokernel is infinite
  bool finite = false;
  bool bound_ok = false;           // exponent divides |pi|^2
  bool invariant = false;          // all cyclic subgroups give the same image
  std::size_t classes = 0;
  std::size_t subgroups = 0;
};
ArtinResult artin_exponent_check(const grp::GroupPtr& g, std::uint32_t p, std::uint64_t seed = 1);

/// Rows of `lattice` span M inside a lattice L; `maps` are maps out of L.
/// Returns a basis (in L coordinates) of the intersection of M with all the
/// kernels.
IntMatrix class_kernel(const IntMatrix& lattice, const std::vector<IntMatrix>& maps);

}  // namespace modcartan::gk
