#pragma once

#include <cstdint>
#include <vector>

#include "modcartan/groups/group.hpp"

namespace modcartan::grp {

using Mask = std::uint64_t;

/// A subgroup of a parent group, with the subgroup also materialized as a
/// group in its own right. Element i of `group()` is `elements()[i]` of the
/// parent, so `elements()` is the embedding.
class Subgroup {
 public:
  /// Throws InvalidArgument unless `elements` is closed and contains 1.
  Subgroup(GroupPtr parent, std::vector<Elem> elements);

  const GroupPtr& parent() const noexcept { return parent_; }
  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  Mask mask() const noexcept { return mask_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t index() const noexcept { return parent_->order() / elements_.size(); }

  bool contains(Elem a) const noexcept { return (mask_ >> a) & 1U; }
  /// Position of a parent element inside `group()`; requires contains(a).
  Elem local(Elem a) const;
  Elem embed(Elem local) const { return elements_.at(local); }

  bool is_normal() const noexcept;
  bool is_whole() const noexcept { return order() == parent_->order(); }
  Subgroup conjugate(Elem g) const;
  /// Left coset representatives t_i (least element of each coset t_i H),
  /// sorted ascending; t_0 = identity.
  std::vector<Elem> left_transversal() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.mask_ == b.mask_;
  }

 private:
  GroupPtr parent_;
  GroupPtr group_;
  std::vector<Elem> elements_;
  std::vector<Elem> local_;
  Mask mask_ = 0;
};

Mask mask_of(const std::vector<Elem>& elements);
std::vector<Elem> elements_of(Mask m);
/// Subgroup generated by the given elements.
Mask closure(const Group& g, const std::vector<Elem>& gens);

Subgroup whole_group(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup generated_subgroup(const GroupPtr& g, const std::vector<Elem>& gens);

/// Every subgroup, sorted by (order, element list).
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

/// Sylow p-subgroup with the lexicographically least element list (trivial
/// when p does not divide |g|).
Subgroup sylow_subgroup(const GroupPtr& g, std::uint32_t p);

/// One representative (lexicographically least) per conjugacy class of cyclic
/// subgroups, trivial subgroup included, sorted by (order, element list).
std::vector<Subgroup> cyclic_subgroup_classes(const GroupPtr& g);
/// Every cyclic subgroup, sorted by (order, element list).
std::vector<Subgroup> cyclic_subgroups(const GroupPtr& g);

struct ElementaryAbelian {
  Subgroup subgroup;
  bool maximal;
};
/// All subgroups isomorphic to (C_p)^k, k >= 1, with maximality flags.
std::vector<ElementaryAbelian> elementary_abelian_subgroups(const GroupPtr& g, std::uint32_t p);

struct Quotient {
  GroupPtr group;
  std::vector<Elem> projection;  // parent element -> coset index
};
/// Cosets are indexed by their least elements in ascending order. Throws
/// NotNormal.
Quotient quotient_group(const Subgroup& n);

}  // namespace modcartan::grp
