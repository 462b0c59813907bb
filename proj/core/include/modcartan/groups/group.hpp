#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace modcartan::grp {

using Elem = std::uint32_t;
using Word = std::vector<std::uint32_t>;  // indices into Group::generators()
using CayleyTable = std::vector<std::vector<Elem>>;

/// Largest order accepted anywhere (subsets are stored as 64-bit masks).
inline constexpr std::size_t kMaxOrder = 64;

/// A finite group given by a validated Cayley table. Element 0 is the
/// identity. Generators are the lexicographically least generating sequence
/// found greedily; every element carries a breadth-first word in them.
class Group {
 public:
  /// Validates the table (Latin square, identity at 0, associativity) and
  /// throws NotAGroup with a witness otherwise. Names default to "g<i>".
  static Group from_table(CayleyTable table, std::vector<std::string> names = {},
                          std::string label = {});

  std::size_t order() const noexcept { return table_.size(); }
  Elem identity() const noexcept { return 0; }
  Elem mul(Elem a, Elem b) const noexcept { return table_[a][b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  /// g x g^-1
  Elem conj(Elem g, Elem x) const noexcept { return mul(mul(g, x), inv(g)); }
  std::uint32_t element_order(Elem a) const noexcept { return orders_[a]; }

  const CayleyTable& table() const noexcept { return table_; }
  const std::string& name(Elem a) const { return names_[a]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// The spec string (or a synthesized description) the group came from.
  const std::string& label() const noexcept { return label_; }

  const std::vector<Elem>& generators() const noexcept { return generators_; }
  /// Breadth-first generator word reaching `a`; empty for the identity.
  const Word& word_for(Elem a) const { return words_[a]; }
  Elem evaluate(const Word& w) const;
  /// Breadth-first order of elements; each element after the first is
  /// bfs_parent(x) * generators()[bfs_generator(x)].
  const std::vector<Elem>& bfs_order() const noexcept { return bfs_order_; }
  Elem bfs_parent(Elem a) const noexcept { return parent_[a]; }
  std::uint32_t bfs_generator(Elem a) const noexcept { return parent_gen_[a]; }

  bool is_abelian() const noexcept;
  bool is_cyclic() const noexcept;
  /// Classes sorted by their least element; each class sorted.
  std::vector<std::vector<Elem>> conjugacy_classes() const;

  friend bool operator==(const Group& a, const Group& b) { return a.table_ == b.table_; }

 private:
  Group() = default;
  CayleyTable table_;
  std::vector<std::string> names_;
  std::string label_;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<Elem> generators_;
  std::vector<Word> words_;
  std::vector<Elem> bfs_order_;
  std::vector<Elem> parent_;
  std::vector<std::uint32_t> parent_gen_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Full Cayley-table validation; throws NotAGroup(axiom, witness).
GroupPtr validate_cayley(const CayleyTable& table, std::vector<std::string> names = {});

/// Grammar: Cn | Dn (dihedral of order n) | Q8 | Sn (n <= 4) | A4 | spec x spec
/// | table:<path>. Throws SpecSyntaxError, UnsupportedGroup, OrderLimitExceeded.
GroupPtr parse_group_spec(const std::string& spec);

/// Direct product; element (a, b) has index a * |B| + b.
GroupPtr direct_product(const Group& a, const Group& b);

}  // namespace modcartan::grp
