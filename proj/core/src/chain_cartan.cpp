#include "modcartan/artinring/chain_cartan.hpp"

#include "modcartan/error.hpp"

namespace modcartan::ar {

namespace {

std::string algebra_name(const ChainRing& r, const grp::Group& g) { return r.to_string() + "[" + g.label() + "]"; }

}  // namespace

std::vector<ChainPim> chain_pims(const grp::GroupPtr& g, ChainRing ring, std::uint64_t seed) {
  const auto ma = rep::ModularAlgebra::get(g, ring.p(), seed);
  const alg::GroupAlgebra a(g, ring);
  const alg::IdealBasis rad = alg::radical_chain(a, seed);
  const ChainRepModule reg = chain_regular_module(g, ring);
  std::vector<ChainPim> out;
  for (const auto& pim : ma->pims()) {
    ChainVector lifted(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) lifted[k] = ring.lift(static_cast<la::Residue>(pim.idempotent.coeff(k)));
    alg::AlgElement e = alg::lift_idempotent(alg::AlgElement(a, std::move(lifted)), rad);
    // Translates g e with independent reductions generate R[pi] e (Nakayama).
    la::Subspace seen(ma->field(), a.dim());
    std::vector<ChainVector> basis;
    for (grp::Elem h = 0; h < a.dim() && basis.size() < pim.module.dim(); ++h) {
      ChainVector v = (a.basis(h) * e).coeffs();
      la::FpVector red(v.size());
      for (std::size_t k = 0; k < v.size(); ++k) red[k] = ring.residue(v[k]);
      if (seen.insert(std::move(red))) basis.push_back(std::move(v));
    }
    if (basis.size() != pim.module.dim()) throw InternalError("lifted PIM has the wrong rank");
    ChainRepModule m = free_submodule(reg, basis).with_provenance(rep::Provenance::Pim);
    out.push_back({std::move(e), std::move(m), pim.simple});
  }
  return out;
}

rep::CompositionMultiset chain_composition(const ChainRepModule& m, std::uint64_t seed) {
  const auto ma = rep::ModularAlgebra::get(m.group(), m.ring().p(), seed);
  rep::CompositionMultiset total(ma->simples().size(), 0);
  for (const auto& piece : graded_pieces(m).pieces) {
    const auto c = ma->chop(piece);
    for (std::size_t i = 0; i < c.size(); ++i) total[i] += c[i];
  }
  return total;
}

ChainCartan cartan_chain(const grp::GroupPtr& g, ChainRing ring, std::uint64_t seed) {
  const auto ma = rep::ModularAlgebra::get(g, ring.p(), seed);
  const auto pims = chain_pims(g, ring, seed);
  const std::size_t n = ma->simples().size();
  gk::IntMatrix rows(n, n);
  std::vector<std::size_t> ranks;
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = chain_composition(pims[i].module, seed);
    for (std::size_t j = 0; j < n; ++j) rows.at(i, j) = c[j];
    ranks.push_back(pims[i].module.rank());
  }
  const std::string name = algebra_name(ring, *g);
  gk::LatticeMap chain({gk::LatticeKind::K0, name, ranks}, {gk::LatticeKind::G0, name, ma->simples().dims()},
                       std::move(rows));
  gk::LatticeMap field = gk::cartan_matrix(g, ring.p(), seed);
  const gk::BigInt t = ring.length();
  const bool scaling_ok = chain.matrix == field.matrix.scaled(t);
  gk::BigInt det_chain = la::determinant(chain.matrix);
  gk::BigInt det_field = la::determinant(field.matrix);
  gk::BigInt tn = 1;
  for (std::size_t i = 0; i < n; ++i) tn *= t;
  const bool rel = det_chain == tn * det_field;
  return {std::move(chain), std::move(field), scaling_ok, std::move(det_chain), std::move(det_field), rel};
}

rep::CompositionMultiset chain_head(const ChainRepModule& p, std::uint64_t seed) {
  const ChainRing& r = p.ring();
  const alg::GroupAlgebra a(p.group(), r);
  const alg::IdealBasis rad = alg::radical_chain(a, seed);
  std::vector<ChainVector> gens;
  const auto& form = rad.span().form();
  for (std::size_t k = 0; k < form.rows(); ++k) {
    const ChainMatrix act = p.algebra_action(form.row(k));
    const ChainMatrix cols = act.transpose();
    for (std::size_t c = 0; c < cols.rows(); ++c) gens.push_back(cols.row_vector(c));
  }
  const la::RowSpan radp(r, p.rank(), gens);
  const la::RowSpan whole(ChainMatrix::identity(r, p.rank()));
  const auto ma = rep::ModularAlgebra::get(p.group(), r.p(), seed);
  return ma->chop(subquotient(p, whole, radp));
}

LiftCheck projective_lift_check(const ChainRepModule& p, const ChainRepModule& q, std::uint64_t seed) {
  if (!(p.ring() == q.ring()) || !(*p.group() == *q.group()))
    throw ParentMismatch("modules over different group algebras");
  const auto ma = rep::ModularAlgebra::get(p.group(), p.ring().p(), seed);
  LiftCheck out;
  out.reduced_p = ma->decompose_projective(reduce_mod_max(p));
  out.reduced_q = ma->decompose_projective(reduce_mod_max(q));
  out.applicable = out.reduced_p == out.reduced_q;
  out.head_p = chain_head(p, seed);
  out.head_q = chain_head(q, seed);
  out.holds = !out.applicable || out.head_p == out.head_q;
  return out;
}

}  // namespace modcartan::ar
