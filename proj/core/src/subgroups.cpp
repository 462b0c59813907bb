#include "modcartan/groups/subgroups.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "modcartan/error.hpp"

namespace modcartan::grp {

Mask mask_of(const std::vector<Elem>& elements) {
  Mask m = 0;
  for (Elem e : elements) m |= Mask{1} << e;
  return m;
}

std::vector<Elem> elements_of(Mask m) {
  std::vector<Elem> out;
  for (Elem i = 0; m != 0; ++i, m >>= 1)
    if (m & 1U) out.push_back(i);
  return out;
}

Mask closure(const Group& g, const std::vector<Elem>& gens) {
  Mask in = 1;
  std::vector<Elem> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Elem s : gens) {
      const Elem y = g.mul(queue[head], s);
      if (!((in >> y) & 1U)) {
        in |= Mask{1} << y;
        queue.push_back(y);
      }
    }
  return in;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty() || elements_.front() != 0)
    throw InvalidArgument("subgroup must contain the identity");
  mask_ = mask_of(elements_);
  const std::size_t n = elements_.size();
  local_.assign(parent_->order(), static_cast<Elem>(n));
  for (Elem i = 0; i < n; ++i) local_[elements_[i]] = i;

  CayleyTable t(n, std::vector<Elem>(n));
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      const Elem prod = parent_->mul(elements_[i], elements_[j]);
      if (!contains(prod)) throw InvalidArgument("element set is not closed under multiplication");
      t[i][j] = local_[prod];
    }
  std::vector<std::string> names;
  for (Elem e : elements_) names.push_back(parent_->name(e));
  std::string label = parent_->label() + "{";
  for (Elem i = 0; i < n; ++i) label += (i ? "," : "") + std::to_string(elements_[i]);
  group_ = std::make_shared<const Group>(Group::from_table(std::move(t), std::move(names), label + "}"));
}

Elem Subgroup::local(Elem a) const {
  if (!contains(a)) throw InvalidArgument("element is not in the subgroup");
  return local_[a];
}

bool Subgroup::is_normal() const noexcept {
  for (Elem g : parent_->generators())
    for (Elem h : elements_)
      if (!contains(parent_->conj(g, h))) return false;
  return true;
}

Subgroup Subgroup::conjugate(Elem g) const {
  std::vector<Elem> conj;
  conj.reserve(elements_.size());
  for (Elem h : elements_) conj.push_back(parent_->conj(g, h));
  return Subgroup(parent_, std::move(conj));
}

std::vector<Elem> Subgroup::left_transversal() const {
  std::vector<Elem> reps;
  Mask covered = 0;
  for (Elem g = 0; g < parent_->order(); ++g) {
    if ((covered >> g) & 1U) continue;
    reps.push_back(g);
    for (Elem h : elements_) covered |= Mask{1} << parent_->mul(g, h);
  }
  return reps;
}

Subgroup whole_group(const GroupPtr& g) {
  std::vector<Elem> all(g->order());
  for (Elem i = 0; i < all.size(); ++i) all[i] = i;
  return Subgroup(g, std::move(all));
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {0}); }

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<Elem>& gens) {
  return Subgroup(g, elements_of(closure(*g, gens)));
}

namespace {

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements() < b.elements();
}

std::vector<Mask> all_subgroup_masks(const Group& g) {
  std::set<Mask> found{Mask{1}};
  std::vector<Mask> queue{Mask{1}};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Mask h = queue[head];
    const auto elems = elements_of(h);
    for (Elem x = 0; x < g.order(); ++x) {
      if ((h >> x) & 1U) continue;
      auto gens = elems;
      gens.push_back(x);
      const Mask bigger = closure(g, gens);
      if (found.insert(bigger).second) queue.push_back(bigger);
    }
  }
  return {found.begin(), found.end()};
}

std::vector<Subgroup> to_sorted(const GroupPtr& g, const std::vector<Mask>& masks) {
  std::vector<Subgroup> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.emplace_back(g, elements_of(m));
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const GroupPtr& g) { return to_sorted(g, all_subgroup_masks(*g)); }

Subgroup sylow_subgroup(const GroupPtr& g, std::uint32_t p) {
  std::size_t target = 1;
  while (g->order() % (target * p) == 0) target *= p;
  if (target == 1) return trivial_subgroup(g);
  for (const auto& h : all_subgroups(g))
    if (h.order() == target) return h;
  throw InternalError("no Sylow subgroup found");
}

std::vector<Subgroup> cyclic_subgroups(const GroupPtr& g) {
  std::set<Mask> masks;
  for (Elem x = 0; x < g->order(); ++x) masks.insert(closure(*g, {x}));
  return to_sorted(g, {masks.begin(), masks.end()});
}

std::vector<Subgroup> cyclic_subgroup_classes(const GroupPtr& g) {
  std::vector<Subgroup> reps;
  std::set<Mask> covered;
  for (const auto& h : cyclic_subgroups(g)) {
    if (covered.count(h.mask())) continue;
    reps.push_back(h);
    for (Elem x = 0; x < g->order(); ++x) covered.insert(h.conjugate(x).mask());
  }
  return reps;
}

std::vector<ElementaryAbelian> elementary_abelian_subgroups(const GroupPtr& g, std::uint32_t p) {
  std::vector<Subgroup> found;
  for (const auto& h : all_subgroups(g)) {
    if (h.order() == 1) continue;
    const auto& sub = *h.group();
    bool ok = sub.is_abelian();
    for (Elem x = 1; ok && x < sub.order(); ++x) ok = sub.element_order(x) == p;
    if (ok) found.push_back(h);
  }
  std::vector<ElementaryAbelian> out;
  for (const auto& h : found) {
    const bool maximal = std::none_of(found.begin(), found.end(), [&](const Subgroup& k) {
      return k.order() > h.order() && (k.mask() & h.mask()) == h.mask();
    });
    out.push_back({h, maximal});
  }
  return out;
}

Quotient quotient_group(const Subgroup& n) {
  if (!n.is_normal()) throw NotNormal("quotient by a subgroup that is not normal");
  const Group& g = *n.parent();
  const auto reps = n.left_transversal();
  std::vector<Elem> proj(g.order());
  for (Elem i = 0; i < reps.size(); ++i)
    for (Elem h : n.elements()) proj[g.mul(reps[i], h)] = i;
  const std::size_t m = reps.size();
  CayleyTable t(m, std::vector<Elem>(m));
  std::vector<std::string> names(m);
  for (Elem i = 0; i < m; ++i) {
    names[i] = i == 0 ? "1" : g.name(reps[i]) + "N";
    for (Elem j = 0; j < m; ++j) t[i][j] = proj[g.mul(reps[i], reps[j])];
  }
  auto q = std::make_shared<const Group>(
      Group::from_table(std::move(t), std::move(names), g.label() + "/N"));
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      if (proj[g.mul(a, b)] != q->mul(proj[a], proj[b]))
        throw InternalError("coset projection is not a homomorphism");
  return {std::move(q), std::move(proj)};
}

}  // namespace modcartan::grp
