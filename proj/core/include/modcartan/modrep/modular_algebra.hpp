#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "modcartan/groupalg/ideals.hpp"
#include "modcartan/modrep/chop.hpp"

namespace modcartan::rep {

struct Pim {
  alg::AlgElement idempotent;  // exact idempotent e of k[pi]
  RepModule module;            // k[pi] e
  std::size_t simple;          // index of its head in the registry
};

struct ProjectiveCover {
  std::vector<int> multiplicities;  // of each PIM, from the head M / JM
  std::size_t dim = 0;              // sum of multiplicities times PIM dims
};

/// Everything computed once per (group, p, seed): simple registry, radical,
/// primitive idempotents of A/J and the PIMs. Instances are cached and shared.
class ModularAlgebra {
 public:
  /// Memoized and thread-safe.
  static std::shared_ptr<const ModularAlgebra> get(const grp::GroupPtr& g, std::uint32_t p,
                                                   std::uint64_t seed = 1);

  const grp::GroupPtr& group() const noexcept { return group_; }
  const PrimeField& field() const noexcept { return registry_.field(); }
  std::uint64_t seed() const noexcept { return seed_; }
  alg::GroupAlgebra algebra() const;

  const SimpleRegistry& simples() const noexcept { return registry_; }
  const alg::IdealBasis& radical() const noexcept { return *radical_; }
  const std::vector<alg::SemisimpleIdempotent>& idempotents() const noexcept { return idempotents_; }
  /// One PIM per simple, aligned with the registry order.
  const std::vector<Pim>& pims() const noexcept { return pims_; }
  /// Multiplicity of S_i in A/J (equals dim S_i / dim End(S_i)).
  const std::vector<int>& semisimple_multiplicities() const noexcept { return mult_; }
  std::vector<std::size_t> pim_dims() const;

  CompositionMultiset chop(const RepModule& m) const;
  /// J M, spanned by the images of the radical basis.
  la::Subspace radical_image(const RepModule& m) const;
  RepModule head(const RepModule& m) const;
  ProjectiveCover projective_cover(const RepModule& m) const;
  bool is_projective(const RepModule& m) const;
  /// Throws NotProjective.
  std::vector<int> decompose_projective(const RepModule& m) const;

  ModularAlgebra(const grp::GroupPtr& g, PrimeField field, std::uint64_t seed);

 private:
  grp::GroupPtr group_;
  std::uint64_t seed_;
  SimpleRegistry registry_;
  std::unique_ptr<alg::IdealBasis> radical_;
  std::vector<alg::SemisimpleIdempotent> idempotents_;
  std::vector<Pim> pims_;
  std::vector<int> mult_;
};

std::shared_ptr<const ModularAlgebra> modular_algebra(const grp::GroupPtr& g, std::uint32_t p,
                                                      std::uint64_t seed = 1);

/// Convenience wrappers over the cached algebra.
std::vector<Pim> pim_modules(const grp::GroupPtr& g, std::uint32_t p, std::uint64_t seed = 1);
ProjectiveCover projective_cover_dim(const RepModule& m, std::uint64_t seed = 1);
bool is_projective(const RepModule& m, std::uint64_t seed = 1);
std::vector<int> decompose_projective(const RepModule& m, std::uint64_t seed = 1);

}  // namespace modcartan::rep
