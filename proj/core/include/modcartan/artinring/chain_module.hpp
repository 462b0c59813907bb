#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "modcartan/exactla/chain_matrix.hpp"
#include "modcartan/modrep/module_io.hpp"
#include "modcartan/modrep/rep_module.hpp"

namespace modcartan::ar {

using la::ChainMatrix;
using la::ChainRing;
using la::ChainVector;

/// A left R[pi]-module that is free of finite rank over a chain ring R, as one
/// action matrix per group generator (columns are coordinates, g.v = rho(g) v).
class ChainRepModule {
 public:
  /// With `validate`, checks that every action is invertible over R and that
  /// rho(x) rho(s) = rho(xs) for all elements x and generators s.
  ChainRepModule(grp::GroupPtr group, ChainRing ring, std::size_t rank,
                 std::vector<ChainMatrix> generator_actions,
                 rep::Provenance tag = rep::Provenance::Derived, bool validate = true);

  const grp::GroupPtr& group() const noexcept { return group_; }
  const ChainRing& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  rep::Provenance provenance() const noexcept { return tag_; }
  ChainRepModule with_provenance(rep::Provenance tag) const;

  const std::vector<ChainMatrix>& generator_actions() const noexcept { return gens_; }
  const ChainMatrix& generator_action(std::size_t i) const { return gens_.at(i); }
  const ChainMatrix& action(grp::Elem g) const { return all_actions().at(g); }
  const std::vector<ChainMatrix>& all_actions() const;
  ChainMatrix algebra_action(std::span<const ChainRing::Elem> coeffs) const;

  bool satisfies_all_relations() const;

 private:
  grp::GroupPtr group_;
  ChainRing ring_;
  std::size_t rank_;
  rep::Provenance tag_;
  std::vector<ChainMatrix> gens_;
  struct ActionCache;
  std::shared_ptr<ActionCache> cache_;
};

ChainRepModule chain_regular_module(const grp::GroupPtr& g, ChainRing ring);
ChainRepModule direct_sum(const ChainRepModule& a, const ChainRepModule& b);
ChainRepModule direct_sum(const std::vector<ChainRepModule>& parts, const grp::GroupPtr& g, ChainRing ring);

/// Module files with chain-ring coefficients; entries are encoded elements.
ChainRepModule chain_module_from_file(const rep::ModuleFile& f);
rep::ModuleFile to_module_file(const ChainRepModule& m, const std::string& group_spec);

/// Entrywise reduction to the residue field.
rep::RepModule reduce_mod_max(const ChainRepModule& m);

/// Smallest R[pi]-invariant R-submodule containing the vectors (Howell closure).
la::RowSpan spin(const ChainRepModule& m, const std::vector<ChainVector>& vectors);
bool is_invariant(const ChainRepModule& m, const la::RowSpan& s);

/// upper / lower for invariant spans lower <= upper with u.upper <= lower,
/// as a module over the residue field. The basis is chosen greedily among
/// the Howell rows of `upper` and coordinates are read off by peeling.
rep::RepModule subquotient(const ChainRepModule& m, const la::RowSpan& upper, const la::RowSpan& lower);

/// The layers u^i M / u^(i+1) M, i = 0 .. t-1, each computed from Howell
/// forms of the images u^i M.
struct GradedPieces {
  std::vector<rep::RepModule> pieces;
};
GradedPieces graded_pieces(const ChainRepModule& m);

/// The R[pi]-module on the R-span of `basis` (vectors of m), which must be
/// invariant and have linearly independent reductions; coordinates come from
/// an invertible square block. Throws InvalidArgument otherwise.
ChainRepModule free_submodule(const ChainRepModule& m, const std::vector<ChainVector>& basis);

}  // namespace modcartan::ar
