#include "modcartan/modrep/rep_module.hpp"

#include <mutex>

#include "modcartan/error.hpp"

namespace modcartan::rep {

struct RepModule::ActionCache {
  std::once_flag once;
  std::vector<FpMatrix> all;
};

const char* to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::Regular: return "regular";
    case Provenance::Pim: return "PIM";
    case Provenance::Induced: return "induced";
    case Provenance::File: return "file";
    case Provenance::Derived: return "derived";
  }
  return "derived";
}

namespace {

std::vector<FpMatrix> element_actions(const grp::Group& g, PrimeField field, std::size_t dim,
                                      const std::vector<FpMatrix>& gens) {
  std::vector<FpMatrix> all(g.order(), FpMatrix(field, dim, dim));
  all[0] = FpMatrix::identity(field, dim);
  for (std::size_t i = 1; i < g.bfs_order().size(); ++i) {
    const grp::Elem x = g.bfs_order()[i];
    all[x] = all[g.bfs_parent(x)] * gens[g.bfs_generator(x)];
  }
  return all;
}

void check_same_algebra(const RepModule& a, const RepModule& b) {
  if (!(a.field() == b.field()) || !(*a.group() == *b.group()))
    throw ParentMismatch("modules over different group algebras");
}

}  // namespace

RepModule::RepModule(grp::GroupPtr group, PrimeField field, std::vector<FpMatrix> generator_actions,
                     Provenance tag, bool validate)
    : RepModule(std::move(group), field,
                generator_actions.empty() ? 0 : generator_actions.front().rows(),
                std::move(generator_actions), tag, validate) {}

RepModule::RepModule(grp::GroupPtr group, PrimeField field, std::size_t dim,
                     std::vector<FpMatrix> generator_actions, Provenance tag, bool validate)
    : group_(std::move(group)),
      field_(field),
      dim_(dim),
      tag_(tag),
      gens_(std::move(generator_actions)),
      cache_(std::make_shared<ActionCache>()) {
  if (!group_) throw InvalidModule("module without a group");
  if (gens_.size() != group_->generators().size())
    throw InvalidModule("expected " + std::to_string(group_->generators().size()) +
                        " generator matrices, got " + std::to_string(gens_.size()));
  for (const auto& m : gens_) {
    if (!m.is_square() || m.rows() != dim_) throw InvalidModule("action matrices must be square of equal size");
    if (!(m.field() == field_)) throw InvalidModule("action matrix over the wrong field");
  }
  if (!validate) return;
  const auto& all = all_actions();
  const auto& g = *group_;
  for (grp::Elem x = 0; x < g.order(); ++x)
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (!(all[x] * gens_[i] == all[g.mul(x, g.generators()[i])]))
        throw InvalidModule("relation fails: rho(" + g.name(x) + ") rho(" +
                            g.name(g.generators()[i]) + ") != rho(" +
                            g.name(g.mul(x, g.generators()[i])) + ")");
}

RepModule RepModule::with_provenance(Provenance tag) const {
  RepModule m = *this;
  m.tag_ = tag;
  return m;
}

const std::vector<FpMatrix>& RepModule::all_actions() const {
  std::call_once(cache_->once, [this] {
    cache_->all = element_actions(*group_, field_, dim_, gens_);
  });
  return cache_->all;
}

FpMatrix RepModule::algebra_action(std::span<const la::Residue> coeffs) const {
  if (coeffs.size() != group_->order()) throw DimensionMismatch("algebra element of the wrong length");
  const auto& all = all_actions();
  FpMatrix out(field_, dim_, dim_);
  for (grp::Elem g = 0; g < coeffs.size(); ++g)
    if (coeffs[g] % field_.p() != 0) out = out + all[g].scaled(coeffs[g] % field_.p());
  return out;
}

bool RepModule::satisfies_all_relations() const {
  const auto& all = all_actions();
  const auto& g = *group_;
  for (grp::Elem a = 0; a < g.order(); ++a)
    for (grp::Elem b = 0; b < g.order(); ++b)
      if (!(all[a] * all[b] == all[g.mul(a, b)])) return false;
  return true;
}

RepModule regular_module(const grp::GroupPtr& g, PrimeField field) {
  std::vector<FpMatrix> gens;
  for (grp::Elem s : g->generators()) {
    FpMatrix m(field, g->order(), g->order());
    for (grp::Elem h = 0; h < g->order(); ++h) m.at(g->mul(s, h), h) = 1;
    gens.push_back(std::move(m));
  }
  return RepModule(g, field, g->order(), std::move(gens), Provenance::Regular, false);
}

RepModule trivial_module(const grp::GroupPtr& g, PrimeField field) {
  return RepModule(g, field, 1,
                   std::vector<FpMatrix>(g->generators().size(), FpMatrix::identity(field, 1)),
                   Provenance::Derived, false);
}

RepModule zero_module(const grp::GroupPtr& g, PrimeField field) {
  return RepModule(g, field, 0, std::vector<FpMatrix>(g->generators().size(), FpMatrix(field, 0, 0)),
                   Provenance::Derived, false);
}

la::Subspace spin(const RepModule& m, const std::vector<FpVector>& vectors) {
  la::Subspace s(m.field(), m.dim());
  std::vector<FpVector> queue;
  for (const auto& v : vectors)
    if (s.insert(v)) queue.push_back(v);
  for (std::size_t head = 0; head < queue.size() && s.dim() < m.dim(); ++head)
    for (const auto& a : m.generator_actions()) {
      FpVector w = a.apply(queue[head]);
      if (s.insert(w)) queue.push_back(std::move(w));
    }
  return s;
}

bool is_invariant(const RepModule& m, const la::Subspace& s) {
  const auto basis = s.basis();
  for (const auto& a : m.generator_actions())
    for (std::size_t r = 0; r < basis.rank; ++r)
      if (!s.contains(a.apply(basis.reduced.row(r)))) return false;
  return true;
}

Submodule submodule(const RepModule& m, const la::Subspace& s) {
  auto basis = s.basis();
  const std::size_t k = basis.rank;
  const FpMatrix bt = basis.reduced.block(0, 0, k, m.dim()).transpose();
  std::vector<FpMatrix> gens;
  for (const auto& a : m.generator_actions()) {
    const FpMatrix w = a * bt;
    FpMatrix coords(m.field(), k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) coords.at(i, j) = w(basis.pivots[i], j);
    if (!(bt * coords == w)) throw InvalidArgument("subspace is not a submodule");
    gens.push_back(std::move(coords));
  }
  RepModule sub(m.group(), m.field(), k, std::move(gens), Provenance::Derived, false);
  return {std::move(basis), std::move(sub)};
}

std::vector<std::size_t> quotient_coordinates(const la::Subspace& s) {
  const auto basis = s.basis();
  std::vector<bool> pivot(s.ambient_dim(), false);
  for (auto c : basis.pivots) pivot[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < s.ambient_dim(); ++c)
    if (!pivot[c]) out.push_back(c);
  return out;
}

RepModule quotient(const RepModule& m, const la::Subspace& s) {
  const auto q = quotient_coordinates(s);
  std::vector<FpMatrix> gens;
  for (const auto& a : m.generator_actions()) {
    FpMatrix coords(m.field(), q.size(), q.size());
    for (std::size_t j = 0; j < q.size(); ++j) {
      const FpVector w = s.reduce(a.column_vector(q[j]));
      for (std::size_t i = 0; i < q.size(); ++i) coords.at(i, j) = w[q[i]];
    }
    gens.push_back(std::move(coords));
  }
  return RepModule(m.group(), m.field(), q.size(), std::move(gens), Provenance::Derived, false);
}

RepModule direct_sum(const RepModule& a, const RepModule& b) {
  check_same_algebra(a, b);
  std::vector<FpMatrix> gens;
  for (std::size_t i = 0; i < a.generator_actions().size(); ++i)
    gens.push_back(la::direct_sum(a.generator_action(i), b.generator_action(i)));
  return RepModule(a.group(), a.field(), a.dim() + b.dim(), std::move(gens), Provenance::Derived, false);
}

RepModule direct_sum(const std::vector<RepModule>& parts, const grp::GroupPtr& g, PrimeField field) {
  RepModule out = zero_module(g, field);
  for (const auto& p : parts) out = direct_sum(out, p);
  return out;
}

RepModule tensor_diagonal(const RepModule& a, const RepModule& b) {
  check_same_algebra(a, b);
  std::vector<FpMatrix> gens;
  for (std::size_t i = 0; i < a.generator_actions().size(); ++i)
    gens.push_back(la::kronecker(a.generator_action(i), b.generator_action(i)));
  return RepModule(a.group(), a.field(), a.dim() * b.dim(), std::move(gens), Provenance::Derived, false);
}

RepModule change_basis(const RepModule& m, const FpMatrix& t) {
  const auto tinv = la::inverse(t);
  if (!tinv || t.rows() != m.dim()) throw InvalidArgument("change of basis needs an invertible matrix");
  std::vector<FpMatrix> gens;
  for (const auto& a : m.generator_actions()) gens.push_back(*tinv * a * t);
  return RepModule(m.group(), m.field(), m.dim(), std::move(gens), m.provenance(), false);
}

RepModule restrict(const RepModule& m, const grp::Subgroup& sub) {
  if (!(*sub.parent() == *m.group())) throw ParentMismatch("restriction to a subgroup of another group");
  std::vector<FpMatrix> gens;
  for (grp::Elem s : sub.group()->generators()) gens.push_back(m.action(sub.embed(s)));
  return RepModule(sub.group(), m.field(), m.dim(), std::move(gens), Provenance::Derived, false);
}

RepModule induce(const RepModule& n, const grp::Subgroup& sub) {
  if (!(*sub.group() == *n.group())) throw ParentMismatch("induction from a module over another group");
  const auto& g = *sub.parent();
  const auto reps = sub.left_transversal();
  const std::size_t r = reps.size(), d = n.dim();
  // coset[x] = (k, h) with x = t_k h
  std::vector<std::pair<std::size_t, grp::Elem>> coset(g.order());
  for (std::size_t k = 0; k < r; ++k)
    for (grp::Elem h : sub.elements()) coset[g.mul(reps[k], h)] = {k, sub.local(h)};
  std::vector<FpMatrix> gens;
  for (grp::Elem s : g.generators()) {
    FpMatrix a(n.field(), r * d, r * d);
    for (std::size_t i = 0; i < r; ++i) {
      const auto [k, h] = coset[g.mul(s, reps[i])];
      const FpMatrix& b = n.action(h);
      for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) a.at(k * d + x, i * d + y) = b(x, y);
    }
    gens.push_back(std::move(a));
  }
  return RepModule(sub.parent(), n.field(), r * d, std::move(gens), Provenance::Induced, false);
}

}  // namespace modcartan::rep
