#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "modcartan/exactla/fp_poly.hpp"
#include "modcartan/modrep/rep_module.hpp"

namespace modcartan::rep {

/// Outcome of one splitting attempt on a module.
struct SplitResult {
  /// A proper nonzero submodule, if one was found.
  std::optional<la::Subspace> submodule;
  /// True when the module was certified irreducible.
  bool irreducible = false;
};

/// Tries random algebra elements (words of length <= 3 in the generators
/// with random coefficients), factors their characteristic polynomials and
/// spins kernel vectors; certifies irreducibility by the Holt-Rees form of
/// Norton's test. Falls back to a bounded deterministic enumeration for small
/// modules over F_2 and F_3; throws IrreducibilityUndecided otherwise.
SplitResult split_module(const RepModule& m, std::mt19937_64& rng);

/// Certified composition factors, in the order met along a series.
std::vector<RepModule> composition_factors(const RepModule& m, std::uint64_t seed);
/// A simple submodule of m (m nonzero).
la::Subspace simple_submodule(const RepModule& m, std::uint64_t seed);
bool is_irreducible(const RepModule& m, std::uint64_t seed);

/// Catalog of the simple k[pi]-modules, obtained by chopping the regular
/// module. Canonical order: dimension, then the trivial module first (largest
/// kernel), then the characteristic polynomials of rho(g) over all g, so the
/// order does not depend on the seed.
class SimpleRegistry {
 public:
  static SimpleRegistry build(const grp::GroupPtr& g, PrimeField field, std::uint64_t seed);

  const grp::GroupPtr& group() const noexcept { return group_; }
  const PrimeField& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return simples_.size(); }
  const RepModule& simple(std::size_t i) const { return simples_.at(i); }
  std::size_t dim(std::size_t i) const { return simples_.at(i).dim(); }
  /// dim End(S_i).
  std::size_t endo_dim(std::size_t i) const { return endo_.at(i); }
  std::vector<std::size_t> dims() const;
  /// Registry index of a simple module; throws InternalError if none matches.
  std::size_t identify(const RepModule& s) const;

 private:
  grp::GroupPtr group_;
  PrimeField field_{2};
  std::vector<RepModule> simples_;
  std::vector<std::size_t> endo_;
  std::vector<std::vector<la::FpPoly>> fingerprints_;
};

/// Characteristic polynomials of rho(g), one per conjugacy class representative;
/// isomorphic modules agree.
std::vector<la::FpPoly> fingerprint(const RepModule& m);

/// Multiplicity of each registry simple among the composition factors.
using CompositionMultiset = std::vector<int>;
CompositionMultiset chop(const RepModule& m, const SimpleRegistry& registry, std::uint64_t seed);
std::size_t multiset_dim(const CompositionMultiset& c, const SimpleRegistry& registry);
std::string multiset_to_string(const CompositionMultiset& c);

}  // namespace modcartan::rep
