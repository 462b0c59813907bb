#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "modcartan/exactla/fp_matrix.hpp"
#include "modcartan/groups/subgroups.hpp"

namespace modcartan::rep {

using la::FpMatrix;
using la::FpVector;
using la::PrimeField;

enum class Provenance { Regular, Pim, Induced, File, Derived };

const char* to_string(Provenance p) noexcept;

/// A left k[pi]-module over a prime field, stored as one action matrix per
/// group generator. Vectors are columns and g.v = rho(g) v. The matrices of
/// all group elements are precomputed along the breadth-first words.
class RepModule {
 public:
  /// With `validate`, checks rho(x) rho(s) = rho(xs) for every element x and
  /// generator s, which forces every Cayley relation; throws InvalidModule.
  RepModule(grp::GroupPtr group, PrimeField field, std::vector<FpMatrix> generator_actions,
            Provenance tag = Provenance::Derived, bool validate = true);
  /// Explicit dimension, needed when the group has no generators.
  RepModule(grp::GroupPtr group, PrimeField field, std::size_t dim,
            std::vector<FpMatrix> generator_actions, Provenance tag = Provenance::Derived,
            bool validate = true);

  const grp::GroupPtr& group() const noexcept { return group_; }
  const PrimeField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  Provenance provenance() const noexcept { return tag_; }
  RepModule with_provenance(Provenance tag) const;

  const std::vector<FpMatrix>& generator_actions() const noexcept { return gens_; }
  const FpMatrix& generator_action(std::size_t i) const { return gens_.at(i); }
  /// rho(g) for any group element.
  const FpMatrix& action(grp::Elem g) const { return all_actions().at(g); }
  const std::vector<FpMatrix>& all_actions() const;
  /// sum over g of c_g rho(g).
  FpMatrix algebra_action(std::span<const la::Residue> coeffs) const;

  /// Compares every Cayley table entry: rho(g) rho(h) = rho(gh).
  bool satisfies_all_relations() const;

 private:
  grp::GroupPtr group_;
  PrimeField field_;
  std::size_t dim_;
  Provenance tag_;
  std::vector<FpMatrix> gens_;
  struct ActionCache;
  std::shared_ptr<ActionCache> cache_;
};

RepModule regular_module(const grp::GroupPtr& g, PrimeField field);
RepModule trivial_module(const grp::GroupPtr& g, PrimeField field);
RepModule zero_module(const grp::GroupPtr& g, PrimeField field);

/// Smallest invariant subspace containing the vectors.
la::Subspace spin(const RepModule& m, const std::vector<FpVector>& vectors);
bool is_invariant(const RepModule& m, const la::Subspace& s);

/// A submodule with its reduced echelon basis; the module acts on the
/// coordinates with respect to that basis (read off at the pivot columns).
struct Submodule {
  la::RrefResult basis;
  RepModule module;
};
/// Throws InvalidArgument if `s` is not invariant.
Submodule submodule(const RepModule& m, const la::Subspace& s);
/// m / s acting on the coordinates at the non-pivot columns of s.
RepModule quotient(const RepModule& m, const la::Subspace& s);
/// Non-pivot columns of s: the coordinates used by quotient().
std::vector<std::size_t> quotient_coordinates(const la::Subspace& s);

RepModule direct_sum(const RepModule& a, const RepModule& b);
RepModule direct_sum(const std::vector<RepModule>& parts, const grp::GroupPtr& g, PrimeField field);
/// Diagonal action on the tensor product (Kronecker products).
RepModule tensor_diagonal(const RepModule& a, const RepModule& b);
/// rho'(g) = t^-1 rho(g) t for an invertible t.
RepModule change_basis(const RepModule& m, const FpMatrix& t);

/// Restriction along sub -> pi; the result lives over sub.group().
RepModule restrict(const RepModule& m, const grp::Subgroup& sub);
/// Induction from sub.group() to sub.parent(). Basis t_i (x) n_j over the
/// left transversal; g t_i = t_k h puts rho_n(h) in block (k, i).
RepModule induce(const RepModule& n, const grp::Subgroup& sub);

}  // namespace modcartan::rep
