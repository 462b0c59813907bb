#include "modcartan/artinring/normal_sylow.hpp"

#include "modcartan/error.hpp"

namespace modcartan::ar {

NormalSylowReport normal_sylow_checks(const grp::GroupPtr& g, la::ChainRing ring, std::uint64_t seed) {
  const grp::Subgroup s = grp::sylow_subgroup(g, ring.p());
  if (!s.is_normal())
    throw SylowNotNormal("the Sylow " + std::to_string(ring.p()) + "-subgroup of " + g->label() + " is not normal");
  NormalSylowReport out;
  out.sylow = "{";
  for (std::size_t i = 0; i < s.elements().size(); ++i) out.sylow += (i ? "," : "") + g->name(s.elements()[i]);
  out.sylow += "}";
  out.sylow_order = s.order();

  const alg::GroupAlgebra a(g, ring);
  const alg::IdealBasis i = alg::augmentation_ideal(a, s);
  out.ideal_length = i.length();
  out.two_sided = i.side() == alg::Sidedness::TwoSided && alg::is_left_closed(i) && alg::is_right_closed(i);

  out.nilpotency_cap = ring.length() * g->order() + 1;
  out.nilpotency = alg::nilpotency_index(i, out.nilpotency_cap);
  if (!out.nilpotency)
    throw InternalError("augmentation ideal of the normal Sylow subgroup is not nilpotent within " +
                        std::to_string(out.nilpotency_cap) + " powers");

  // Kernel of x -> x phi where phi(g, c) = 1 iff g lies in coset c.
  const grp::Quotient q = grp::quotient_group(s);
  out.quotient = q.group->label();
  la::ChainMatrix phi(ring, g->order(), q.group->order());
  for (grp::Elem x = 0; x < g->order(); ++x) phi.at(x, q.projection[x]) = 1;
  const la::RowSpan kernel = la::left_kernel(phi);
  out.kernel_length = kernel.length();
  out.quotient_ok = kernel == i.span();

  std::vector<la::ChainVector> gens;
  for (std::size_t r = 0; r < i.span().form().rows(); ++r) gens.push_back(i.span().form().row_vector(r));
  for (grp::Elem x = 0; x < g->order(); ++x) {
    la::ChainVector v(g->order(), 0);
    v[x] = ring.uniformizer_pow(1);
    gens.push_back(std::move(v));
  }
  const la::RowSpan formula(ring, g->order(), gens);
  const alg::IdealBasis rad = ring.is_field() ? alg::radical(a, seed) : alg::radical_chain(a, seed);
  out.radical_length = rad.length();
  out.radical_ok = formula == rad.span();
  return out;
}

}  // namespace modcartan::ar
