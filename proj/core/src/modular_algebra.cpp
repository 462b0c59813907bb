#include "modcartan/modrep/modular_algebra.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "modcartan/error.hpp"

namespace modcartan::rep {

namespace {

FpVector to_fp(const la::ChainVector& v) { return FpVector(v.begin(), v.end()); }

la::ChainVector to_chain(const FpVector& v) { return la::ChainVector(v.begin(), v.end()); }

// Common kernel of all simple representations, as a subspace of k[pi].
la::Subspace radical_subspace(const SimpleRegistry& reg) {
  const auto& g = *reg.group();
  std::size_t rows = 0;
  for (std::size_t i = 0; i < reg.size(); ++i) rows += reg.dim(i) * reg.dim(i);
  FpMatrix sys(reg.field(), rows, g.order());
  std::size_t r = 0;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    const auto& acts = reg.simple(i).all_actions();
    const std::size_t d = reg.dim(i);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b, ++r)
        for (grp::Elem x = 0; x < g.order(); ++x) sys.at(r, x) = acts[x](a, b);
  }
  const FpMatrix null = la::nullspace(sys);
  la::Subspace j(reg.field(), g.order());
  for (std::size_t k = 0; k < null.rows(); ++k) j.insert(null.row_vector(k));
  return j;
}

// Solves sum_i c_i (l_j l_i) = l_j modulo J for an idempotent generator of the
// minimal left ideal spanned by `l`.
alg::AlgElement ideal_generator(const std::vector<alg::AlgElement>& l, const la::Subspace& j,
                                const std::vector<std::size_t>& q) {
  const auto& f = j.field();
  const std::size_t k = l.size();
  FpMatrix sys(f, k * q.size(), k + 1);
  for (std::size_t a = 0; a < k; ++a) {
    const FpVector rhs = j.reduce(to_fp(l[a].coeffs()));
    for (std::size_t b = 0; b < k; ++b) {
      const FpVector prod = j.reduce(to_fp((l[a] * l[b]).coeffs()));
      for (std::size_t r = 0; r < q.size(); ++r) sys.at(a * q.size() + r, b) = prod[q[r]];
    }
    for (std::size_t r = 0; r < q.size(); ++r) sys.at(a * q.size() + r, k) = rhs[q[r]];
  }
  const auto red = la::rref(sys);
  std::vector<la::Residue> c(k, 0);
  for (std::size_t r = 0; r < red.rank; ++r) {
    if (red.pivots[r] == k) throw InternalError("minimal left ideal without an idempotent generator");
    c[red.pivots[r]] = red.reduced(r, k);
  }
  alg::AlgElement e = l.front().parent().zero();
  for (std::size_t i = 0; i < k; ++i)
    if (c[i] != 0) e = e + l[i].scaled(c[i]);
  return e;
}

}  // namespace

ModularAlgebra::ModularAlgebra(const grp::GroupPtr& g, PrimeField field, std::uint64_t seed)
    : group_(g), seed_(seed), registry_(SimpleRegistry::build(g, field, seed)) {
  const alg::GroupAlgebra a = algebra();
  const la::Subspace jsub = radical_subspace(registry_);
  {
    std::vector<la::ChainVector> rows;
    const auto jb = jsub.basis();
    for (std::size_t r = 0; r < jb.rank; ++r) rows.push_back(to_chain(jb.reduced.row_vector(r)));
    radical_ = std::make_unique<alg::IdealBasis>(a, la::RowSpan(a.coeff(), a.dim(), rows),
                                                 alg::Sidedness::TwoSided);
  }

  // Primitive orthogonal idempotents of A/J: repeatedly take a minimal left
  // ideal L of (A/J)(1 - E), an idempotent generator e' of L, and add
  // (1 - E) e' to E.
  const RepModule reg = regular_module(g, field);
  const RepModule bar = quotient(reg, jsub);
  const auto q = quotient_coordinates(jsub);
  auto canonical = [&](const alg::AlgElement& x) {
    return alg::AlgElement(a, to_chain(jsub.reduce(to_fp(x.coeffs()))));
  };
  auto to_bar = [&](const alg::AlgElement& x) {
    const FpVector v = jsub.reduce(to_fp(x.coeffs()));
    FpVector out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) out[i] = v[q[i]];
    return out;
  };
  auto from_bar = [&](std::span<const la::Residue> v) {
    la::ChainVector out(a.dim(), 0);
    for (std::size_t i = 0; i < q.size(); ++i) out[q[i]] = v[i];
    return alg::AlgElement(a, std::move(out));
  };

  alg::AlgElement sum = a.zero();
  for (std::uint64_t round = 0;; ++round) {
    const alg::AlgElement f = canonical(a.one() - sum);
    if (f.is_zero()) break;
    if (round > a.dim()) throw InternalError("idempotent decomposition of A/J did not terminate");
    const la::Subspace left = spin(bar, {to_bar(f)});
    const Submodule af = submodule(bar, left);
    const la::Subspace minimal = simple_submodule(af.module, seed_ + 0x9e3779b97f4a7c15ULL * (round + 1));
    const auto mb = minimal.basis();
    const FpMatrix in_bar =
        mb.reduced.block(0, 0, mb.rank, af.module.dim()) * af.basis.reduced.block(0, 0, af.basis.rank, bar.dim());
    std::vector<alg::AlgElement> l;
    std::vector<FpVector> bar_rows;
    for (std::size_t r = 0; r < in_bar.rows(); ++r) {
      l.push_back(from_bar(in_bar.row(r)));
      bar_rows.push_back(in_bar.row_vector(r));
    }
    const alg::AlgElement e1 = ideal_generator(l, jsub, q);
    const alg::AlgElement e2 = canonical(f * e1);
    const auto simple =
        registry_.identify(submodule(bar, la::Subspace::spanned_by(field, bar.dim(), bar_rows)).module);
    idempotents_.push_back({e2, simple});
    sum = canonical(sum + e2);
  }
  std::stable_sort(idempotents_.begin(), idempotents_.end(),
                   [](const auto& x, const auto& y) { return x.simple < y.simple; });

  mult_.assign(registry_.size(), 0);
  for (const auto& e : idempotents_) ++mult_[e.simple];
  for (std::size_t i = 0; i < registry_.size(); ++i) {
    if (mult_[i] == 0) throw InternalError("simple module missing from A/J");
    const auto it = std::find_if(idempotents_.begin(), idempotents_.end(),
                                 [&](const auto& e) { return e.simple == i; });
    alg::AlgElement e = alg::lift_idempotent(it->element, *radical_);
    const la::Subspace span = spin(reg, {to_fp(e.coeffs())});
    RepModule pim = submodule(reg, span).module.with_provenance(Provenance::Pim);
    pims_.push_back({std::move(e), std::move(pim), i});
  }
}

std::shared_ptr<const ModularAlgebra> ModularAlgebra::get(const grp::GroupPtr& g, std::uint32_t p,
                                                          std::uint64_t seed) {
  using Key = std::tuple<grp::CayleyTable, std::uint32_t, std::uint64_t>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const ModularAlgebra>> cache;
  Key key{g->table(), p, seed};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const ModularAlgebra>(g, PrimeField(p), seed);
  std::lock_guard lock(mu);
  return cache.emplace(std::move(key), std::move(built)).first->second;
}

alg::GroupAlgebra ModularAlgebra::algebra() const {
  return alg::GroupAlgebra(group_, la::ChainRing::field(field().p()));
}

std::vector<std::size_t> ModularAlgebra::pim_dims() const {
  std::vector<std::size_t> out;
  for (const auto& p : pims_) out.push_back(p.module.dim());
  return out;
}

CompositionMultiset ModularAlgebra::chop(const RepModule& m) const {
  return rep::chop(m, registry_, seed_);
}

la::Subspace ModularAlgebra::radical_image(const RepModule& m) const {
  if (!(m.field() == field()) || !(*m.group() == *group_))
    throw ParentMismatch("module over another group algebra");
  la::Subspace out(m.field(), m.dim());
  const auto& form = radical_->span().form();
  for (std::size_t r = 0; r < form.rows() && out.dim() < m.dim(); ++r) {
    const FpVector coeffs = to_fp(form.row_vector(r));
    const FpMatrix act = m.algebra_action(coeffs);
    for (std::size_t c = 0; c < act.cols(); ++c) out.insert(act.column_vector(c));
  }
  return out;
}

RepModule ModularAlgebra::head(const RepModule& m) const { return quotient(m, radical_image(m)); }

ProjectiveCover ModularAlgebra::projective_cover(const RepModule& m) const {
  ProjectiveCover out;
  out.multiplicities = chop(head(m));
  for (std::size_t i = 0; i < out.multiplicities.size(); ++i)
    out.dim += static_cast<std::size_t>(out.multiplicities[i]) * pims_[i].module.dim();
  return out;
}

bool ModularAlgebra::is_projective(const RepModule& m) const {
  return projective_cover(m).dim == m.dim();
}

std::vector<int> ModularAlgebra::decompose_projective(const RepModule& m) const {
  auto cover = projective_cover(m);
  if (cover.dim != m.dim())
    throw NotProjective("projective cover has dimension " + std::to_string(cover.dim) +
                        " but the module has dimension " + std::to_string(m.dim()));
  return cover.multiplicities;
}

std::shared_ptr<const ModularAlgebra> modular_algebra(const grp::GroupPtr& g, std::uint32_t p,
                                                      std::uint64_t seed) {
  return ModularAlgebra::get(g, p, seed);
}

std::vector<Pim> pim_modules(const grp::GroupPtr& g, std::uint32_t p, std::uint64_t seed) {
  return ModularAlgebra::get(g, p, seed)->pims();
}

ProjectiveCover projective_cover_dim(const RepModule& m, std::uint64_t seed) {
  return ModularAlgebra::get(m.group(), m.field().p(), seed)->projective_cover(m);
}

bool is_projective(const RepModule& m, std::uint64_t seed) {
  return ModularAlgebra::get(m.group(), m.field().p(), seed)->is_projective(m);
}

std::vector<int> decompose_projective(const RepModule& m, std::uint64_t seed) {
  return ModularAlgebra::get(m.group(), m.field().p(), seed)->decompose_projective(m);
}

}  // namespace modcartan::rep
