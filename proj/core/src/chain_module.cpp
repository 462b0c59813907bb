#include "modcartan/artinring/chain_module.hpp"

#include <mutex>

#include "modcartan/error.hpp"

namespace modcartan::ar {

struct ChainRepModule::ActionCache {
  std::once_flag once;
  std::vector<ChainMatrix> all;
};

ChainRepModule::ChainRepModule(grp::GroupPtr group, ChainRing ring, std::size_t rank,
                               std::vector<ChainMatrix> generator_actions, rep::Provenance tag,
                               bool validate)
    : group_(std::move(group)),
      ring_(ring),
      rank_(rank),
      tag_(tag),
      gens_(std::move(generator_actions)),
      cache_(std::make_shared<ActionCache>()) {
  if (!group_) throw InvalidModule("module without a group");
  if (gens_.size() != group_->generators().size())
    throw InvalidModule("expected " + std::to_string(group_->generators().size()) +
                        " generator matrices, got " + std::to_string(gens_.size()));
  for (const auto& m : gens_) {
    if (m.rows() != rank_ || m.cols() != rank_) throw InvalidModule("action matrices must be square of equal size");
    if (!(m.ring() == ring_)) throw InvalidModule("action matrix over the wrong ring");
  }
  if (!validate) return;
  for (const auto& m : gens_)
    if (!la::inverse(m)) throw InvalidModule("action matrix is not invertible over " + ring_.to_string());
  const auto& all = all_actions();
  const auto& g = *group_;
  for (grp::Elem x = 0; x < g.order(); ++x)
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (!(all[x] * gens_[i] == all[g.mul(x, g.generators()[i])]))
        throw InvalidModule("relation fails: rho(" + g.name(x) + ") rho(" + g.name(g.generators()[i]) +
                            ") != rho(" + g.name(g.mul(x, g.generators()[i])) + ")");
}

ChainRepModule ChainRepModule::with_provenance(rep::Provenance tag) const {
  ChainRepModule m = *this;
  m.tag_ = tag;
  return m;
}

const std::vector<ChainMatrix>& ChainRepModule::all_actions() const {
  std::call_once(cache_->once, [this] {
    const auto& g = *group_;
    std::vector<ChainMatrix> all(g.order(), ChainMatrix(ring_, rank_, rank_));
    all[0] = ChainMatrix::identity(ring_, rank_);
    for (std::size_t i = 1; i < g.bfs_order().size(); ++i) {
      const grp::Elem x = g.bfs_order()[i];
      all[x] = all[g.bfs_parent(x)] * gens_[g.bfs_generator(x)];
    }
    cache_->all = std::move(all);
  });
  return cache_->all;
}

ChainMatrix ChainRepModule::algebra_action(std::span<const ChainRing::Elem> coeffs) const {
  if (coeffs.size() != group_->order()) throw DimensionMismatch("algebra element of the wrong length");
  const auto& all = all_actions();
  ChainMatrix out(ring_, rank_, rank_);
  for (grp::Elem g = 0; g < coeffs.size(); ++g)
    if (coeffs[g] != 0) out = out + all[g].scaled(coeffs[g]);
  return out;
}

bool ChainRepModule::satisfies_all_relations() const {
  const auto& all = all_actions();
  const auto& g = *group_;
  for (grp::Elem a = 0; a < g.order(); ++a)
    for (grp::Elem b = 0; b < g.order(); ++b)
      if (!(all[a] * all[b] == all[g.mul(a, b)])) return false;
  return true;
}

ChainRepModule chain_regular_module(const grp::GroupPtr& g, ChainRing ring) {
  std::vector<ChainMatrix> gens;
  for (grp::Elem s : g->generators()) {
    ChainMatrix m(ring, g->order(), g->order());
    for (grp::Elem h = 0; h < g->order(); ++h) m.at(g->mul(s, h), h) = 1;
    gens.push_back(std::move(m));
  }
  return ChainRepModule(g, ring, g->order(), std::move(gens), rep::Provenance::Regular, false);
}

ChainRepModule direct_sum(const ChainRepModule& a, const ChainRepModule& b) {
  if (!(a.ring() == b.ring()) || !(*a.group() == *b.group()))
    throw ParentMismatch("modules over different group algebras");
  const std::size_t n = a.rank() + b.rank();
  std::vector<ChainMatrix> gens;
  for (std::size_t i = 0; i < a.generator_actions().size(); ++i) {
    ChainMatrix m(a.ring(), n, n);
    const auto& x = a.generator_action(i);
    const auto& y = b.generator_action(i);
    for (std::size_t r = 0; r < a.rank(); ++r)
      for (std::size_t c = 0; c < a.rank(); ++c) m.at(r, c) = x(r, c);
    for (std::size_t r = 0; r < b.rank(); ++r)
      for (std::size_t c = 0; c < b.rank(); ++c) m.at(a.rank() + r, a.rank() + c) = y(r, c);
    gens.push_back(std::move(m));
  }
  return ChainRepModule(a.group(), a.ring(), n, std::move(gens), rep::Provenance::Derived, false);
}

ChainRepModule direct_sum(const std::vector<ChainRepModule>& parts, const grp::GroupPtr& g, ChainRing ring) {
  ChainRepModule out(g, ring, 0, std::vector<ChainMatrix>(g->generators().size(), ChainMatrix(ring, 0, 0)),
                     rep::Provenance::Derived, false);
  for (const auto& p : parts) out = direct_sum(out, p);
  return out;
}

ChainRepModule chain_module_from_file(const rep::ModuleFile& f) {
  const auto g = grp::parse_group_spec(f.group);
  const ChainRing ring = la::parse_coeff_spec(f.coeff);
  if (f.actions.size() != g->generators().size())
    throw InvalidModule("group " + f.group + " has " + std::to_string(g->generators().size()) +
                        " generators but the file gives " + std::to_string(f.actions.size()));
  std::vector<ChainMatrix> gens;
  for (const auto& rows : f.actions) {
    try {
      gens.push_back(ChainMatrix::from_codes(ring, rows, f.dim));
    } catch (const InvalidArgument& e) {
      throw InvalidModule(e.what());
    }
  }
  ChainRepModule out(g, ring, f.dim, std::move(gens), rep::Provenance::File, true);
  if (!out.satisfies_all_relations()) throw InvalidModule("action violates the Cayley table");
  return out;
}

rep::ModuleFile to_module_file(const ChainRepModule& m, const std::string& group_spec) {
  rep::ModuleFile f;
  f.group = group_spec;
  f.coeff = m.ring().to_string();
  f.dim = m.rank();
  for (const auto& a : m.generator_actions()) {
    std::vector<std::vector<std::uint64_t>> rows(m.rank(), std::vector<std::uint64_t>(m.rank()));
    for (std::size_t r = 0; r < m.rank(); ++r)
      for (std::size_t c = 0; c < m.rank(); ++c) rows[r][c] = a(r, c);
    f.actions.push_back(std::move(rows));
  }
  return f;
}

rep::RepModule reduce_mod_max(const ChainRepModule& m) {
  std::vector<la::FpMatrix> gens;
  for (const auto& a : m.generator_actions()) gens.push_back(a.reduce());
  return rep::RepModule(m.group(), m.ring().residue_field(), m.rank(), std::move(gens), rep::Provenance::Derived,
                        false);
}

la::RowSpan spin(const ChainRepModule& m, const std::vector<ChainVector>& vectors) {
  la::RowSpan s(m.ring(), m.rank(), vectors);
  for (;;) {
    std::vector<ChainVector> more;
    for (std::size_t r = 0; r < s.form().rows(); ++r)
      for (const auto& a : m.generator_actions()) {
        ChainVector w = a.apply(s.form().row(r));
        if (!s.contains(w)) more.push_back(std::move(w));
      }
    if (more.empty()) return s;
    s = s.extended(more);
  }
}

bool is_invariant(const ChainRepModule& m, const la::RowSpan& s) {
  for (std::size_t r = 0; r < s.form().rows(); ++r)
    for (const auto& a : m.generator_actions())
      if (!s.contains(a.apply(s.form().row(r)))) return false;
  return true;
}

rep::RepModule subquotient(const ChainRepModule& m, const la::RowSpan& upper, const la::RowSpan& lower) {
  const ChainRing& r = m.ring();
  if (!upper.contains(lower)) throw InvalidArgument("subquotient needs lower <= upper");
  if (!is_invariant(m, upper) || !is_invariant(m, lower))
    throw InvalidArgument("subquotient of spans that are not submodules");
  const auto u = r.uniformizer_pow(1);
  auto scaled = [&](const ChainVector& v, ChainRing::Elem c) {
    ChainVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = r.mul(c, v[i]);
    return out;
  };
  for (std::size_t k = 0; k < upper.form().rows(); ++k)
    if (!lower.contains(scaled(upper.form().row_vector(k), u)))
      throw InvalidArgument("subquotient is not killed by the maximal ideal");

  // spans[s] = lower + <b_0 .. b_(s-1)>
  std::vector<ChainVector> basis;
  std::vector<la::RowSpan> spans{lower};
  for (std::size_t k = 0; k < upper.form().rows(); ++k) {
    ChainVector h = upper.form().row_vector(k);
    if (spans.back().contains(h)) continue;
    spans.push_back(spans.back().extended({h}));
    basis.push_back(std::move(h));
  }
  const std::size_t d = basis.size();
  auto coordinates = [&](ChainVector y) {
    std::vector<la::Residue> c(d, 0);
    for (std::size_t s = d; s-- > 0;) {
      bool found = false;
      for (std::uint32_t a = 0; a < r.p() && !found; ++a) {
        ChainVector z = y;
        const auto t = scaled(basis[s], r.lift(a));
        for (std::size_t i = 0; i < z.size(); ++i) z[i] = r.sub(z[i], t[i]);
        if (spans[s].contains(z)) {
          c[s] = a;
          y = std::move(z);
          found = true;
        }
      }
      if (!found) throw InternalError("vector outside the filtration step while reading coordinates");
    }
    return c;
  };
  std::vector<la::FpMatrix> gens;
  for (const auto& a : m.generator_actions()) {
    la::FpMatrix x(r.residue_field(), d, d);
    for (std::size_t j = 0; j < d; ++j) {
      const auto c = coordinates(a.apply(basis[j]));
      for (std::size_t i = 0; i < d; ++i) x.at(i, j) = c[i];
    }
    gens.push_back(std::move(x));
  }
  return rep::RepModule(m.group(), r.residue_field(), d, std::move(gens), rep::Provenance::Derived, false);
}

GradedPieces graded_pieces(const ChainRepModule& m) {
  const ChainRing& r = m.ring();
  const la::RowSpan whole(ChainMatrix::identity(r, m.rank()));
  auto image = [&](std::uint32_t i) {
    const auto c = r.uniformizer_pow(i);
    std::vector<ChainVector> rows;
    for (std::size_t k = 0; k < whole.form().rows(); ++k) {
      ChainVector v = whole.form().row_vector(k);
      for (auto& x : v) x = r.mul(c, x);
      rows.push_back(std::move(v));
    }
    return la::RowSpan(r, m.rank(), rows);
  };
  GradedPieces out;
  la::RowSpan upper = whole;
  for (std::uint32_t i = 0; i < r.length(); ++i) {
    la::RowSpan lower = image(i + 1);
    out.pieces.push_back(subquotient(m, upper, lower));
    upper = std::move(lower);
  }
  return out;
}

ChainRepModule free_submodule(const ChainRepModule& m, const std::vector<ChainVector>& basis) {
  const ChainRing& r = m.ring();
  const std::size_t k = basis.size(), n = m.rank();
  la::FpMatrix reduced(r.residue_field(), k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) reduced.at(i, j) = r.residue(basis[i].at(j));
  const auto red = la::rref(reduced);
  if (red.rank != k) throw InvalidArgument("basis vectors of a free submodule must have independent reductions");
  ChainMatrix block(r, k, k);  // block(i, c) = basis[c][pivot_i]
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < k; ++c) block.at(i, c) = basis[c][red.pivots[i]];
  const auto inv = la::inverse(block);
  if (!inv) throw InternalError("pivot block of a free basis is singular");
  std::vector<ChainMatrix> gens;
  for (const auto& a : m.generator_actions()) {
    ChainMatrix x(r, k, k);
    for (std::size_t j = 0; j < k; ++j) {
      const ChainVector w = a.apply(basis[j]);
      ChainVector ws(k);
      for (std::size_t i = 0; i < k; ++i) ws[i] = w[red.pivots[i]];
      const ChainVector c = inv->apply(ws);
      ChainVector back(n, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t t = 0; t < n; ++t) back[t] = r.add(back[t], r.mul(c[i], basis[i][t]));
      if (back != w) throw InvalidArgument("span of the basis is not a submodule");
      for (std::size_t i = 0; i < k; ++i) x.at(i, j) = c[i];
    }
    gens.push_back(std::move(x));
  }
  return ChainRepModule(m.group(), r, k, std::move(gens), rep::Provenance::Derived, false);
}

}  // namespace modcartan::ar
