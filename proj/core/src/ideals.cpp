#include "modcartan/groupalg/ideals.hpp"

#include "modcartan/error.hpp"
#include "modcartan/modrep/modular_algebra.hpp"

namespace modcartan::alg {

IdealBasis::IdealBasis(GroupAlgebra alg, la::RowSpan span, Sidedness side)
    : alg_(std::move(alg)), span_(std::move(span)), side_(side) {
  if (!(span_.ring() == alg_.coeff()) || span_.ambient_dim() != alg_.dim())
    throw DimensionMismatch("ideal basis does not live in the group algebra");
}

std::vector<AlgElement> IdealBasis::generators() const {
  std::vector<AlgElement> out;
  for (std::size_t r = 0; r < span_.form().rows(); ++r)
    out.emplace_back(alg_, span_.form().row_vector(r));
  return out;
}

namespace {

ChainVector left_translate(const GroupAlgebra& alg, grp::Elem g, const ChainVector& x) {
  ChainVector out(x.size(), 0);
  for (grp::Elem h = 0; h < x.size(); ++h) out[alg.group()->mul(g, h)] = x[h];
  return out;
}

ChainVector right_translate(const GroupAlgebra& alg, grp::Elem g, const ChainVector& x) {
  ChainVector out(x.size(), 0);
  for (grp::Elem h = 0; h < x.size(); ++h) out[alg.group()->mul(h, g)] = x[h];
  return out;
}

Sidedness sidedness(bool left, bool right) {
  if (left && right) return Sidedness::TwoSided;
  return left ? Sidedness::Left : Sidedness::Right;
}

}  // namespace

bool is_left_closed(const IdealBasis& i) {
  const auto& form = i.span().form();
  for (grp::Elem s : i.algebra().group()->generators())
    for (std::size_t r = 0; r < form.rows(); ++r)
      if (!i.span().contains(left_translate(i.algebra(), s, form.row_vector(r)))) return false;
  return true;
}

bool is_right_closed(const IdealBasis& i) {
  const auto& form = i.span().form();
  for (grp::Elem s : i.algebra().group()->generators())
    for (std::size_t r = 0; r < form.rows(); ++r)
      if (!i.span().contains(right_translate(i.algebra(), s, form.row_vector(r)))) return false;
  return true;
}

IdealBasis ideal_from_generators(const GroupAlgebra& alg, const std::vector<AlgElement>& gens) {
  std::vector<ChainVector> rows;
  for (const auto& g : gens) {
    if (!(g.parent() == alg)) throw ParentMismatch("ideal generator from another algebra");
    rows.push_back(g.coeffs());
  }
  IdealBasis tmp(alg, la::RowSpan(alg.coeff(), alg.dim(), rows), Sidedness::Left);
  return IdealBasis(alg, tmp.span(), sidedness(is_left_closed(tmp), is_right_closed(tmp)));
}

IdealBasis augmentation_ideal(const GroupAlgebra& alg, const grp::Subgroup& sub) {
  if (!(*sub.parent() == *alg.group())) throw ParentMismatch("subgroup of another group");
  const auto& r = alg.coeff();
  std::vector<AlgElement> gens;
  for (grp::Elem lambda : sub.elements()) {
    if (lambda == 0) continue;
    for (grp::Elem g = 0; g < alg.dim(); ++g) {
      ChainVector v(alg.dim(), 0);
      v[alg.group()->mul(lambda, g)] = 1;
      v[g] = r.sub(v[g], 1);
      gens.emplace_back(alg, std::move(v));
    }
  }
  return ideal_from_generators(alg, gens);
}

IdealBasis ideal_product(const IdealBasis& a, const IdealBasis& b) {
  if (!(a.algebra() == b.algebra())) throw ParentMismatch("ideals of different algebras");
  std::vector<AlgElement> prods;
  const auto xs = a.generators();
  const auto ys = b.generators();
  for (const auto& x : xs)
    for (const auto& y : ys) {
      auto z = x * y;
      if (!z.is_zero()) prods.push_back(std::move(z));
    }
  return ideal_from_generators(a.algebra(), prods);
}

std::optional<std::size_t> nilpotency_index(const IdealBasis& i, std::size_t cap) {
  IdealBasis power = i;
  std::size_t d = 1;
  while (!power.is_zero()) {
    if (d >= cap) return std::nullopt;
    power = ideal_product(power, i);
    ++d;
  }
  return d;
}

IdealBasis radical(const GroupAlgebra& alg, std::uint64_t seed) {
  if (!alg.over_field()) throw InvalidArgument("radical() needs field coefficients; use radical_chain");
  const auto& j = rep::ModularAlgebra::get(alg.group(), alg.coeff().p(), seed)->radical();
  return IdealBasis(alg, j.span(), Sidedness::TwoSided);
}

IdealBasis radical_chain(const GroupAlgebra& alg, std::uint64_t seed) {
  const ChainRing& r = alg.coeff();
  const auto& j = rep::ModularAlgebra::get(alg.group(), r.p(), seed)->radical();
  if (r.is_field()) return IdealBasis(alg, j.span(), Sidedness::TwoSided);
  std::vector<ChainVector> rows;
  for (std::size_t k = 0; k < j.span().form().rows(); ++k) {
    ChainVector v(alg.dim());
    for (std::size_t g = 0; g < alg.dim(); ++g)
      v[g] = r.lift(static_cast<la::Residue>(j.span().form()(k, g)));
    rows.push_back(std::move(v));
  }
  for (std::size_t g = 0; g < alg.dim(); ++g) {
    ChainVector v(alg.dim(), 0);
    v[g] = r.uniformizer_pow(1);
    rows.push_back(std::move(v));
  }
  return IdealBasis(alg, la::RowSpan(r, alg.dim(), rows), Sidedness::TwoSided);
}

std::vector<SemisimpleIdempotent> semisimple_primitive_idempotents(const GroupAlgebra& alg,
                                                                   std::uint64_t seed) {
  if (!alg.over_field()) throw InvalidArgument("idempotents of A/J are computed over the residue field");
  std::vector<SemisimpleIdempotent> out;
  for (const auto& e : rep::ModularAlgebra::get(alg.group(), alg.coeff().p(), seed)->idempotents())
    out.push_back({AlgElement(alg, e.element.coeffs()), e.simple});
  return out;
}

AlgElement lift_idempotent(const AlgElement& ebar, const IdealBasis& n) {
  if (!(ebar.parent() == n.algebra())) throw ParentMismatch("idempotent and ideal in different algebras");
  if (!n.contains(ebar * ebar - ebar))
    throw NotApproxIdempotent("e^2 - e does not lie in the given ideal");
  AlgElement e = ebar;
  for (int step = 0; step < 64; ++step) {
    const AlgElement e2 = e * e;
    if (e2 == e) return e;
    const AlgElement e3 = e2 * e;
    const ChainRing& r = e.parent().coeff();
    e = e2.scaled(r.from_int(3)) - e3.scaled(r.from_int(2));
  }
  throw InternalError("idempotent lifting did not converge; the ideal is not nilpotent");
}

}  // namespace modcartan::alg
