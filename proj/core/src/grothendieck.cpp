#include "modcartan/grothendieck/grothendieck.hpp"

#include <random>

#include "modcartan/error.hpp"

namespace modcartan::gk {

namespace {

std::string algebra_name(const rep::ModularAlgebra& a) {
  return a.field().to_string() + "[" + a.group()->label() + "]";
}

IntMatrix rows_matrix(const std::vector<rep::CompositionMultiset>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i].at(j);
  return m;
}

IntMatrix hstack(const std::vector<IntMatrix>& parts, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& p : parts) cols += p.cols();
  IntMatrix out(rows, cols);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < p.cols(); ++c) out.at(r, off + c) = p(r, c);
    off += p.cols();
  }
  return out;
}

}  // namespace

Lattice g0_lattice(const rep::ModularAlgebra& a) {
  return {LatticeKind::G0, algebra_name(a), a.simples().dims()};
}

Lattice k0_lattice(const rep::ModularAlgebra& a) { return {LatticeKind::K0, algebra_name(a), a.pim_dims()}; }

LatticeMap::LatticeMap(Lattice dom, Lattice cod, IntMatrix m)
    : domain(std::move(dom)), codomain(std::move(cod)), matrix(std::move(m)) {
  if (matrix.rows() != domain.rank() || matrix.cols() != codomain.rank())
    throw DimensionMismatch("lattice map of shape " + std::to_string(matrix.rows()) + "x" +
                            std::to_string(matrix.cols()) + " between lattices of ranks " +
                            std::to_string(domain.rank()) + " and " + std::to_string(codomain.rank()));
}

LatticeMap LatticeMap::then(const LatticeMap& next) const {
  if (next.domain.algebra != codomain.algebra || next.domain.kind != codomain.kind)
    throw ParentMismatch("composing lattice maps through different lattices");
  return LatticeMap(domain, next.codomain, matrix * next.matrix);
}

LatticeMap cartan_matrix(const grp::GroupPtr& g, std::uint32_t p, std::uint64_t seed) {
  const auto a = rep::ModularAlgebra::get(g, p, seed);
  std::vector<rep::CompositionMultiset> rows;
  for (const auto& pim : a->pims()) rows.push_back(a->chop(pim.module));
  return LatticeMap(k0_lattice(*a), g0_lattice(*a), rows_matrix(rows, a->simples().size()));
}

CartanInjectivity cartan_injectivity(const LatticeMap& cartan) {
  BigInt det = la::determinant(cartan.matrix);
  return {det, det != 0};
}

CartanInjectivity cartan_injectivity(const grp::GroupPtr& g, std::uint32_t p, std::uint64_t seed) {
  return cartan_injectivity(cartan_matrix(g, p, seed));
}

LatticeMap restriction_map(const grp::Subgroup& sub, std::uint32_t p, std::uint64_t seed) {
  const auto a = rep::ModularAlgebra::get(sub.parent(), p, seed);
  const auto b = rep::ModularAlgebra::get(sub.group(), p, seed);
  std::vector<rep::CompositionMultiset> rows;
  for (std::size_t j = 0; j < a->simples().size(); ++j)
    rows.push_back(b->chop(rep::restrict(a->simples().simple(j), sub)));
  return LatticeMap(g0_lattice(*a), g0_lattice(*b), rows_matrix(rows, b->simples().size()));
}

LatticeMap induction_map(const grp::Subgroup& sub, std::uint32_t p, std::uint64_t seed) {
  const auto a = rep::ModularAlgebra::get(sub.parent(), p, seed);
  const auto b = rep::ModularAlgebra::get(sub.group(), p, seed);
  std::vector<rep::CompositionMultiset> rows;
  for (std::size_t j = 0; j < b->simples().size(); ++j)
    rows.push_back(a->chop(rep::induce(b->simples().simple(j), sub)));
  return LatticeMap(g0_lattice(*b), g0_lattice(*a), rows_matrix(rows, a->simples().size()));
}

LatticeMap k0_restriction_map(const grp::Subgroup& sub, std::uint32_t p, std::uint64_t seed) {
  const auto a = rep::ModularAlgebra::get(sub.parent(), p, seed);
  const auto b = rep::ModularAlgebra::get(sub.group(), p, seed);
  std::vector<rep::CompositionMultiset> rows;
  for (const auto& pim : a->pims()) rows.push_back(b->decompose_projective(rep::restrict(pim.module, sub)));
  return LatticeMap(k0_lattice(*a), k0_lattice(*b), rows_matrix(rows, b->simples().size()));
}

rep::RepModule realize(const rep::ModularAlgebra& a, const std::vector<int>& coords) {
  if (coords.size() != a.simples().size()) throw DimensionMismatch("G0 coordinates of the wrong length");
  std::vector<rep::RepModule> parts;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0) throw InvalidArgument("only nonnegative classes are realized as modules");
    for (int k = 0; k < coords[i]; ++k) parts.push_back(a.simples().simple(i));
  }
  return rep::direct_sum(parts, a.group(), a.field());
}

FrobeniusReport frobenius_identity_check(const grp::Subgroup& sub, std::uint32_t p, std::size_t samples,
                                         std::uint64_t seed, std::size_t max_dim) {
  const auto a = rep::ModularAlgebra::get(sub.parent(), p, seed);
  const auto b = rep::ModularAlgebra::get(sub.group(), p, seed);
  std::mt19937_64 rng(seed);
  auto dim_of = [](const std::vector<int>& c, const std::vector<std::size_t>& dims) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < c.size(); ++i) d += static_cast<std::size_t>(c[i]) * dims[i];
    return d;
  };
  const auto xdims = b->simples().dims();
  const auto ydims = a->simples().dims();
  FrobeniusReport report;
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<int> x(xdims.size(), 0), y(ydims.size(), 0);
    x[0] = y[0] = 1;
    for (int tries = 0; s > 0 && tries < 256; ++tries) {
      std::vector<int> xs(xdims.size()), ys(ydims.size());
      for (auto& v : xs) v = static_cast<int>(rng() % 2);
      for (auto& v : ys) v = static_cast<int>(rng() % 2);
      const std::size_t dx = dim_of(xs, xdims), dy = dim_of(ys, ydims);
      if (dx == 0 || dy == 0 || sub.index() * dx * dy > max_dim) continue;
      x = std::move(xs);
      y = std::move(ys);
      break;
    }
    const rep::RepModule xm = realize(*b, x), ym = realize(*a, y);
    FrobeniusSample fs{x, y, {}, {}, false};
    fs.lhs = a->chop(rep::tensor_diagonal(rep::induce(xm, sub), ym));
    fs.rhs = a->chop(rep::induce(rep::tensor_diagonal(xm, rep::restrict(ym, sub)), sub));
    fs.pass = fs.lhs == fs.rhs;
    report.pass = report.pass && fs.pass;
    report.samples.push_back(std::move(fs));
  }
  return report;
}

ArtinResult artin_exponent_check(const grp::GroupPtr& g, std::uint32_t p, std::uint64_t seed) {
  const auto a = rep::ModularAlgebra::get(g, p, seed);
  const std::size_t n = a->simples().size();
  auto stacked = [&](const std::vector<grp::Subgroup>& subs) {
    IntMatrix u(0, n);
    for (const auto& c : subs) u = u.stacked(induction_map(c, p, seed).matrix);
    return u;
  };
  const auto classes = grp::cyclic_subgroup_classes(g);
  const auto all = grp::cyclic_subgroups(g);
  const auto snf = la::smith_normal_form(stacked(classes));
  const auto snf_all = la::smith_normal_form(stacked(all));

  ArtinResult r;
  r.classes = classes.size();
  r.subgroups = all.size();
  r.invariants = snf.invariants();
  r.free_rank = n - snf.rank;
  r.finite = r.free_rank == 0;
  r.exponent = r.finite ? (r.invariants.empty() ? BigInt(1) : r.invariants.back()) : BigInt(0);
  const BigInt order = g->order();
  r.bound_ok = r.finite && (order * order) % r.exponent == 0;
  // The class lattice lies inside the full one; equal invariants give equal
  // index, hence equal lattices.
  r.invariant = snf_all.rank == snf.rank && snf_all.invariants() == r.invariants;
  return r;
}

IntMatrix class_kernel(const IntMatrix& lattice, const std::vector<IntMatrix>& maps) {
  if (lattice.rows() == 0 || maps.empty()) return lattice;
  std::vector<IntMatrix> images;
  for (const auto& m : maps) {
    if (m.rows() != lattice.cols()) throw DimensionMismatch("restriction map does not start at the lattice");
    images.push_back(lattice * m);
  }
  const IntMatrix k = la::left_kernel(hstack(images, lattice.rows()));
  if (k.rows() == 0) return IntMatrix(0, lattice.cols());
  return k * lattice;
}

}  // namespace modcartan::gk
