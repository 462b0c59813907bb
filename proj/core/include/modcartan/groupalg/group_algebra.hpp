#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "modcartan/exactla/chain_matrix.hpp"
#include "modcartan/groups/group.hpp"

namespace modcartan::alg {

using la::ChainRing;
using la::ChainVector;

class AlgElement;

/// The group ring R[pi] for R a prime field or a chain ring. The basis is
/// indexed by group elements; a prime field is the length-one chain ring.
class GroupAlgebra {
 public:
  GroupAlgebra(grp::GroupPtr group, ChainRing coeff);

  const grp::GroupPtr& group() const noexcept { return group_; }
  const ChainRing& coeff() const noexcept { return coeff_; }
  std::size_t dim() const noexcept { return group_->order(); }
  bool over_field() const noexcept { return coeff_.is_field(); }

  AlgElement zero() const;
  AlgElement one() const;
  AlgElement basis(grp::Elem g) const;
  /// u = sum of all group elements.
  AlgElement group_sum() const;
  /// Coefficients are encoded ring elements and are validated.
  AlgElement element(ChainVector coeffs) const;

  friend bool operator==(const GroupAlgebra& a, const GroupAlgebra& b) {
    return (a.group_ == b.group_ || *a.group_ == *b.group_) && a.coeff_ == b.coeff_;
  }

 private:
  grp::GroupPtr group_;
  ChainRing coeff_;
};

/// An element of a group algebra as its coefficient vector.
class AlgElement {
 public:
  AlgElement(GroupAlgebra parent, ChainVector coeffs);

  const GroupAlgebra& parent() const noexcept { return parent_; }
  const ChainVector& coeffs() const noexcept { return coeffs_; }
  ChainRing::Elem coeff(grp::Elem g) const { return coeffs_.at(g); }
  bool is_zero() const noexcept;

  /// Throws ParentMismatch when the algebras differ.
  AlgElement operator*(const AlgElement& o) const;
  AlgElement operator+(const AlgElement& o) const;
  AlgElement operator-(const AlgElement& o) const;
  AlgElement scaled(ChainRing::Elem c) const;

  std::string to_string() const;

  friend bool operator==(const AlgElement& a, const AlgElement& b) {
    return a.parent_ == b.parent_ && a.coeffs_ == b.coeffs_;
  }

 private:
  GroupAlgebra parent_;
  ChainVector coeffs_;
  void check_parent(const AlgElement& o) const;
};

inline AlgElement mul(const AlgElement& a, const AlgElement& b) { return a * b; }

}  // namespace modcartan::alg
