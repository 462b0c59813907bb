#include "modcartan/verify/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>

#include <json.hpp>

#include "modcartan/artinring/chain_cartan.hpp"
#include "modcartan/artinring/normal_sylow.hpp"
#include "modcartan/error.hpp"
#include "modcartan/grothendieck/grothendieck.hpp"
#include "modcartan/modrep/hom.hpp"

namespace modcartan::verify {

using nlohmann::ordered_json;

namespace {

struct Input {
  grp::GroupPtr g;
  la::ChainRing ring;
  std::uint64_t seed;
};

ordered_json big(const la::BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

ordered_json matrix_json(const la::IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(big(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void check(SuiteReport& r, std::string name, bool ok, ordered_json evidence) {
  r.checks.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, evidence.dump()});
}

bool is_power_of(la::BigInt x, std::uint32_t p) {
  if (x < 0) x = -x;
  if (x == 0) return false;
  while (x % p == 0) x /= p;
  return x == 1;
}

std::uint64_t p_part(std::uint64_t n, std::uint32_t p) {
  std::uint64_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

rep::RepModule pim_sum(const rep::ModularAlgebra& a, const std::vector<int>& v, bool reversed) {
  std::vector<rep::RepModule> parts;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (int k = 0; k < v[i]; ++k) parts.push_back(a.pims()[i].module);
  if (reversed) std::reverse(parts.begin(), parts.end());
  return rep::direct_sum(parts, a.group(), a.field());
}

la::FpVector random_vector(const la::PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  la::FpVector v(n);
  for (auto& x : v) x = static_cast<la::Residue>(rng() % f.p());
  return v;
}

la::FpMatrix random_invertible(const la::PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    la::FpMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = static_cast<la::Residue>(rng() % f.p());
    if (la::inverse(m)) return m;
  }
}

std::vector<int> random_multiplicities(std::size_t n, const std::vector<std::size_t>& dims, std::size_t max_dim,
                                       std::mt19937_64& rng) {
  for (;;) {
    std::vector<int> v(n);
    std::size_t d = 0;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<int>(rng() % 3);
      d += static_cast<std::size_t>(v[i]) * dims[i];
    }
    if (d > 0 && d <= max_dim) return v;
  }
}

// ---------------------------------------------------------------- suites

void brauer_nesbitt(const Input& in, SuiteReport& r) {
  const auto a = rep::ModularAlgebra::get(in.g, in.ring.p(), in.seed);
  const auto sdims = a->simples().dims();
  if (in.ring.is_field()) {
    const auto c = gk::cartan_matrix(in.g, in.ring.p(), in.seed);
    bool rows_ok = true;
    for (std::size_t i = 0; i < c.matrix.rows(); ++i) {
      la::BigInt s = 0;
      for (std::size_t j = 0; j < c.matrix.cols(); ++j) s += c.matrix(i, j) * sdims[j];
      rows_ok = rows_ok && s == a->pims()[i].module.dim();
    }
    check(r, "cartan_rows", rows_ok,
          {{"cartan", matrix_json(c.matrix)}, {"simple_dims", sdims}, {"pim_dims", a->pim_dims()}});
    const auto inj = gk::cartan_injectivity(c);
    check(r, "det_nonzero", inj.injective, {{"det", big(inj.det)}, {"injective", inj.injective}});
    if (in.g->order() % in.ring.p() == 0 && !is_power_of(inj.det, in.ring.p()))
      r.anomalies.push_back("det " + inj.det.str() + " is not a power of " + std::to_string(in.ring.p()));
    return;
  }
  const auto cc = ar::cartan_chain(in.g, in.ring, in.seed);
  bool rows_ok = true;
  for (std::size_t i = 0; i < cc.chain.matrix.rows(); ++i) {
    la::BigInt s = 0;
    for (std::size_t j = 0; j < cc.chain.matrix.cols(); ++j) s += cc.chain.matrix(i, j) * sdims[j];
    rows_ok = rows_ok && s == la::BigInt(in.ring.length()) * cc.chain.domain.dims[i];
  }
  check(r, "cartan_rows", rows_ok,
        {{"cartan", matrix_json(cc.chain.matrix)}, {"simple_dims", sdims}, {"pim_ranks", cc.chain.domain.dims},
         {"length", in.ring.length()}});
  check(r, "det_nonzero", cc.det_chain != 0,
        {{"det", big(cc.det_chain)}, {"det_residue_field", big(cc.det_field)}, {"injective", cc.det_chain != 0}});
  if (in.g->order() % in.ring.p() == 0 && !is_power_of(cc.det_field, in.ring.p()))
    r.anomalies.push_back("det " + cc.det_field.str() + " over the residue field is not a power of " +
                          std::to_string(in.ring.p()));
}

void cyclic_diagonal(const Input& in, SuiteReport& r) {
  const std::uint64_t pa = p_part(in.g->order(), in.ring.p());
  la::IntMatrix m;
  if (in.ring.is_field()) {
    m = gk::cartan_matrix(in.g, in.ring.p(), in.seed).matrix;
  } else {
    m = ar::cartan_chain(in.g, in.ring, in.seed).chain.matrix;
  }
  const la::BigInt expect = la::BigInt(pa) * in.ring.length();
  bool positive = true, value = true;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    positive = positive && m(i, i) > 0;
    value = value && m(i, i) == expect;
  }
  check(r, "diagonal", m.is_diagonal(), {{"cartan", matrix_json(m)}});
  check(r, "positive_diagonal", positive, {{"cartan", matrix_json(m)}});
  check(r, "diagonal_value", value, {{"expected", big(expect)}, {"p_part_of_order", pa}, {"length", in.ring.length()}});
  if (in.ring.is_field()) {
    const auto a = rep::ModularAlgebra::get(in.g, in.ring.p(), in.seed);
    bool off_zero = true;
    for (std::size_t i = 0; i < a->pims().size(); ++i)
      for (std::size_t j = 0; j < a->pims().size(); ++j)
        if (i != j && rep::hom_dim(a->pims()[i].module, a->pims()[j].module) != 0) off_zero = false;
    check(r, "hom_criterion", off_zero == m.is_diagonal(),
          {{"hom_between_distinct_pims_zero", off_zero}, {"diagonal", m.is_diagonal()}});
  }
}

void semisimple(const Input& in, SuiteReport& r) {
  const auto n = rep::ModularAlgebra::get(in.g, in.ring.p(), in.seed)->simples().size();
  const alg::GroupAlgebra a(in.g, in.ring);
  if (in.ring.is_field()) {
    const auto rad = alg::radical(a, in.seed);
    check(r, "radical_zero", rad.is_zero(), {{"radical_dim", rad.length()}});
    const auto c = gk::cartan_matrix(in.g, in.ring.p(), in.seed).matrix;
    check(r, "cartan_identity", c == la::IntMatrix::identity(n), {{"cartan", matrix_json(c)}});
    return;
  }
  const auto rad = alg::radical_chain(a, in.seed);
  std::vector<la::ChainVector> rows;
  for (grp::Elem x = 0; x < a.dim(); ++x) {
    la::ChainVector v(a.dim(), 0);
    v[x] = in.ring.uniformizer_pow(1);
    rows.push_back(std::move(v));
  }
  const la::RowSpan u_span(in.ring, a.dim(), rows);
  check(r, "radical_is_uR", rad.span() == u_span,
        {{"radical_length", rad.length()}, {"u_span_length", u_span.length()}});
  const auto c = ar::cartan_chain(in.g, in.ring, in.seed).chain.matrix;
  check(r, "cartan_t_identity", c == la::IntMatrix::identity(n).scaled(in.ring.length()),
        {{"cartan", matrix_json(c)}, {"length", in.ring.length()}});
}

void scaling(const Input& in, SuiteReport& r) {
  const auto a = rep::ModularAlgebra::get(in.g, in.ring.p(), in.seed);
  const auto cc = ar::cartan_chain(in.g, in.ring, in.seed);
  check(r, "scaling_law", cc.scaling_ok,
        {{"cartan_chain", matrix_json(cc.chain.matrix)}, {"cartan_field", matrix_json(cc.field.matrix)},
         {"length", in.ring.length()}});
  check(r, "det_relation", cc.det_relation,
        {{"det_chain", big(cc.det_chain)}, {"det_field", big(cc.det_field)}, {"length", in.ring.length()},
         {"simples", a->simples().size()}});

  const auto pims = ar::chain_pims(in.g, in.ring, in.seed);
  bool exact = true, pieces_ok = true, reduction_ok = true;
  ordered_json ev = ordered_json::array();
  for (std::size_t i = 0; i < pims.size(); ++i) {
    const auto& e = pims[i].idempotent;
    exact = exact && e * e == e;
    const auto gp = ar::graded_pieces(pims[i].module);
    std::size_t total = 0;
    for (const auto& p : gp.pieces) total += p.dim();
    pieces_ok = pieces_ok && gp.pieces.size() == in.ring.length() && total == in.ring.length() * pims[i].module.rank();
    std::vector<int> unit(pims.size(), 0);
    unit[i] = 1;
    const auto dec = a->decompose_projective(ar::reduce_mod_max(pims[i].module));
    reduction_ok = reduction_ok && dec == unit;
    ev.push_back({{"rank", pims[i].module.rank()}, {"pieces", gp.pieces.size()}, {"piece_dim_sum", total},
                  {"reduction_decomposition", dec}});
  }
  check(r, "idempotents_exact", exact, {{"pims", pims.size()}});
  check(r, "piece_dimensions", pieces_ok, ev);
  check(r, "reduction_is_field_pim", reduction_ok, ev);

  const auto reg = ar::chain_regular_module(in.g, in.ring);
  const auto total = ar::chain_composition(reg, in.seed);
  auto once = a->chop(ar::reduce_mod_max(reg));
  for (auto& x : once) x *= static_cast<int>(in.ring.length());
  check(r, "regular_pieces", total == once, {{"pieces_total", total}, {"t_times_reduction", once}});
}

void chouinard(const Input& in, SuiteReport& r) {
  const auto mods = module_corpus(in.g, in.ring.p(), in.seed);
  const grp::Subgroup s = grp::sylow_subgroup(in.g, in.ring.p());
  std::size_t proj = 0, nonproj = 0;
  for (const auto& nm : mods) {
    const auto v = projectivity_verdicts(nm.module, in.seed);
    (v.full ? proj : nonproj)++;
    ordered_json ev{{"dim", nm.module.dim()}, {"full", v.full}, {"sylow", v.sylow}, {"elementary_abelian", v.elementary}};
    bool ok = v.agree();
    if (v.full && s.index() * nm.module.dim() <= 48) {
      const bool induced = rep::is_projective(rep::induce(rep::restrict(nm.module, s), s), in.seed);
      ev["induced_from_sylow_projective"] = induced;
      ok = ok && induced;
    }
    check(r, "module:" + nm.name, ok, ev);
  }
  check(r, "corpus_size", mods.size() >= 10, {{"modules", mods.size()}});
  check(r, "both_directions", proj > 0 && nonproj > 0, {{"projective", proj}, {"non_projective", nonproj}});
}

void krull_schmidt(const Input& in, SuiteReport& r) {
  std::mt19937_64 rng(in.seed);
  const auto a = rep::ModularAlgebra::get(in.g, in.ring.p(), in.seed);
  const std::size_t n = a->pims().size();
  constexpr int kPairs = 20;
  std::size_t equal_pairs = 0, distinct_pairs = 0;
  if (in.ring.is_field()) {
    const auto dims = a->pim_dims();
    for (int k = 0; k < kPairs; ++k) {
      const auto v = random_multiplicities(n, dims, 32, rng);
      const auto w = k % 2 == 0 ? v : random_multiplicities(n, dims, 32, rng);
      const auto pm = pim_sum(*a, v, false);
      auto qm = pim_sum(*a, w, true);
      qm = rep::change_basis(qm, random_invertible(a->field(), qm.dim(), rng));
      const auto cp = a->chop(pm), cq = a->chop(qm);
      const auto dp = a->decompose_projective(pm), dq = a->decompose_projective(qm);
      (dp == dq ? equal_pairs : distinct_pairs)++;
      const bool ok = ((cp == cq) == (dp == dq)) && dp == v && dq == w;
      check(r, "pair_" + std::to_string(k + 1), ok,
            {{"p", v}, {"q", w}, {"chop_p", cp}, {"chop_q", cq}, {"decomposition_p", dp}, {"decomposition_q", dq}});
    }
  } else {
    const auto pims = ar::chain_pims(in.g, in.ring, in.seed);
    std::vector<std::size_t> ranks;
    for (const auto& p : pims) ranks.push_back(p.module.rank());
    auto sum = [&](const std::vector<int>& v, bool reversed) {
      std::vector<ar::ChainRepModule> parts;
      for (std::size_t i = 0; i < v.size(); ++i)
        for (int k = 0; k < v[i]; ++k) parts.push_back(pims[i].module);
      if (reversed) std::reverse(parts.begin(), parts.end());
      return ar::direct_sum(parts, in.g, in.ring);
    };
    for (int k = 0; k < kPairs; ++k) {
      const auto v = random_multiplicities(n, ranks, 24, rng);
      const auto w = k % 2 == 0 ? v : random_multiplicities(n, ranks, 24, rng);
      const auto lc = ar::projective_lift_check(sum(v, false), sum(w, true), in.seed);
      (lc.applicable ? equal_pairs : distinct_pairs)++;
      const bool ok = lc.holds && lc.head_p == v && lc.head_q == w;
      check(r, "pair_" + std::to_string(k + 1), ok,
            {{"p", v}, {"q", w}, {"reductions_isomorphic", lc.applicable}, {"head_p", lc.head_p},
             {"head_q", lc.head_q}});
    }
  }
  check(r, "both_directions", equal_pairs > 0 && distinct_pairs > 0,
        {{"equal_pairs", equal_pairs}, {"distinct_pairs", distinct_pairs}});
}

void globaldim_witness(const Input& in, SuiteReport& r) {
  const alg::GroupAlgebra a(in.g, in.ring);
  const auto u = a.group_sum();
  bool central = true;
  for (grp::Elem s : in.g->generators()) central = central && a.basis(s) * u == u * a.basis(s);
  check(r, "u_central", central, {{"generators", in.g->generators().size()}});
  check(r, "u_squared_zero", (u * u).is_zero(), {{"order", in.g->order()}, {"p", in.ring.p()}});
  const auto field = la::PrimeField(in.ring.p());
  const auto reg = rep::regular_module(in.g, field);
  const la::Subspace line = rep::spin(reg, {la::FpVector(in.g->order(), 1)});
  bool killed = true;
  const auto basis = line.basis();
  for (grp::Elem g = 0; g < in.g->order(); ++g)
    killed = killed && basis.reduced.row_vector(0) == reg.action(g).apply(basis.reduced.row(0));
  check(r, "u_spans_trivial_line", line.dim() == 1 && killed, {{"dim", line.dim()}});
  const auto q = rep::quotient(reg, line);
  const auto cover = rep::projective_cover_dim(q, in.seed);
  check(r, "quotient_not_projective", cover.dim != q.dim(),
        {{"dim", q.dim()}, {"projective_cover_dim", cover.dim}, {"cover_multiplicities", cover.multiplicities}});
}

void lemma46(const Input& in, SuiteReport& r) {
  const auto ns = ar::normal_sylow_checks(in.g, in.ring, in.seed);
  check(r, "two_sided", ns.two_sided, {{"sylow", ns.sylow}, {"ideal_length", ns.ideal_length}});
  check(r, "nilpotent", ns.nilpotency.has_value(),
        {{"index", ns.nilpotency ? ordered_json(*ns.nilpotency) : ordered_json()}, {"cap", ns.nilpotency_cap}});
  check(r, "quotient", ns.quotient_ok,
        {{"quotient_group", ns.quotient}, {"kernel_length", ns.kernel_length}, {"ideal_length", ns.ideal_length}});
  check(r, "radical_formula", ns.radical_ok,
        {{"radical_length", ns.radical_length}, {"ideal_length", ns.ideal_length}});
}

void artin(const Input& in, SuiteReport& r) {
  const auto res = gk::artin_exponent_check(in.g, in.ring.p(), in.seed);
  ordered_json inv = ordered_json::array();
  for (const auto& d : res.invariants) inv.push_back(big(d));
  check(r, "cokernel_finite", res.finite, {{"free_rank", res.free_rank}, {"invariants", inv}});
  const la::BigInt order = in.g->order();
  check(r, "exponent_bound", res.bound_ok, {{"exponent", big(res.exponent)}, {"bound", big(order * order)}});
  check(r, "conjugate_invariance", res.invariant, {{"classes", res.classes}, {"cyclic_subgroups", res.subgroups}});

  const auto c = gk::cartan_matrix(in.g, in.ring.p(), in.seed);
  const la::IntMatrix ker = la::left_kernel(c.matrix);
  std::vector<la::IntMatrix> maps;
  for (const auto& s : grp::cyclic_subgroup_classes(in.g))
    maps.push_back(gk::k0_restriction_map(s, in.ring.p(), in.seed).matrix);
  const la::IntMatrix ck = gk::class_kernel(ker, maps);
  check(r, "cartan_kernel_zero", ker.rows() == 0 && ck.rows() == 0,
        {{"kernel_rank", ker.rows()}, {"class_kernel_rank", ck.rows()}});
}

void frobenius(const Input& in, SuiteReport& r) {
  const auto classes = grp::cyclic_subgroup_classes(in.g);
  std::optional<grp::Subgroup> sub;
  for (const auto& c : classes)
    if (c.order() < in.g->order()) sub = c;
  const std::uint32_t p = in.ring.p();
  const auto rep = gk::frobenius_identity_check(*sub, p, 6, in.seed);
  for (std::size_t k = 0; k < rep.samples.size(); ++k) {
    const auto& s = rep.samples[k];
    check(r, "sample_" + std::to_string(k + 1), s.pass,
          {{"subgroup_order", sub->order()}, {"x", s.x}, {"y", s.y}, {"lhs", s.lhs}, {"rhs", s.rhs}});
  }
  const auto a = rep::ModularAlgebra::get(in.g, p, in.seed);
  const auto b = rep::ModularAlgebra::get(sub->group(), p, in.seed);
  bool recip = true;
  ordered_json ev = ordered_json::array();
  for (std::size_t i = 0; i < b->simples().size(); ++i)
    for (std::size_t j = 0; j < a->simples().size(); ++j) {
      const auto& n = b->simples().simple(i);
      const auto& m = a->simples().simple(j);
      const auto lhs = rep::hom_dim(rep::induce(n, *sub), m);
      const auto rhs = rep::hom_dim(n, rep::restrict(m, *sub));
      recip = recip && lhs == rhs;
      ev.push_back({lhs, rhs});
    }
  check(r, "reciprocity_dims", recip, ev);
}

using SuiteFn = std::function<void(const Input&, SuiteReport&)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> m{
      {"brauer_nesbitt", brauer_nesbitt}, {"cyclic_diagonal", cyclic_diagonal},
      {"semisimple", semisimple},         {"scaling", scaling},
      {"chouinard", chouinard},           {"krull_schmidt", krull_schmidt},
      {"globaldim_witness", globaldim_witness}, {"lemma46", lemma46},
      {"artin", artin},                   {"frobenius", frobenius},
  };
  return m;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"brauer_nesbitt", "cyclic_diagonal",   "semisimple", "scaling",
                                              "chouinard",      "krull_schmidt",     "globaldim_witness",
                                              "lemma46",        "artin",             "frobenius"};
  return names;
}

bool is_suite(const std::string& name) { return registry().count(name) > 0; }

std::optional<std::string> incompatibility(const std::string& suite, const grp::GroupPtr& g,
                                           const la::ChainRing& ring) {
  if (!is_suite(suite)) throw UnknownSuite("unknown suite '" + suite + "'");
  const bool divides = g->order() % ring.p() == 0;
  const bool field = ring.is_field();
  if (suite == "cyclic_diagonal" && !g->is_cyclic()) return "the group is not cyclic";
  if (suite == "semisimple" && divides) return "p divides the group order";
  if (suite == "scaling" && field) return "needs a chain ring of length at least 2";
  if ((suite == "chouinard" || suite == "globaldim_witness") && !field) return "needs field coefficients";
  if ((suite == "chouinard" || suite == "globaldim_witness") && !divides) return "p does not divide the group order";
  if ((suite == "artin" || suite == "frobenius") && !field) return "needs field coefficients";
  if (suite == "frobenius" && g->order() == 1) return "the trivial group has no proper subgroup";
  if (suite == "lemma46" && !grp::sylow_subgroup(g, ring.p()).is_normal()) return "the Sylow p-subgroup is not normal";
  return std::nullopt;
}

SuiteReport skipped_report(const std::string& suite, const std::string& group_spec, const std::string& coeff_spec,
                           std::uint64_t seed, const std::string& reason) {
  SuiteReport r;
  r.suite = suite;
  r.group = group_spec;
  r.coeff = coeff_spec;
  r.seed = seed;
  r.checks.push_back({"applicable", CheckStatus::Skipped, ordered_json{{"reason", reason}}.dump()});
  return r;
}

SuiteReport run_suite(const std::string& suite, const std::string& group_spec, const std::string& coeff_spec,
                      std::uint64_t seed) {
  const auto it = registry().find(suite);
  if (it == registry().end()) throw UnknownSuite("unknown suite '" + suite + "'");
  const auto start = std::chrono::steady_clock::now();
  Input in{grp::parse_group_spec(group_spec), la::parse_coeff_spec(coeff_spec), seed};
  if (auto why = incompatibility(suite, in.g, in.ring))
    throw IncompatibleInput(suite + " on " + group_spec + " over " + coeff_spec + ": " + *why);
  SuiteReport r;
  r.suite = suite;
  r.group = group_spec;
  r.coeff = coeff_spec;
  r.seed = seed;
  try {
    it->second(in, r);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Usage) throw;
    r.checks.push_back({"computation", CheckStatus::Error, ordered_json{{"error", e.code()}, {"message", e.what()}}.dump()});
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<NamedModule> module_corpus(const grp::GroupPtr& g, std::uint32_t p, std::uint64_t seed,
                                       std::size_t max_dim) {
  const auto a = rep::ModularAlgebra::get(g, p, seed);
  const auto& f = a->field();
  std::mt19937_64 rng(seed ^ 0x5bd1e995u);
  std::vector<NamedModule> out;
  auto add = [&](std::string name, rep::RepModule m) {
    if (m.dim() > 0 && m.dim() <= max_dim) out.push_back({std::move(name), std::move(m)});
  };
  const auto reg = rep::regular_module(g, f);
  add("regular", reg);
  for (std::size_t i = 0; i < a->pims().size(); ++i) add("pim" + std::to_string(i + 1), a->pims()[i].module);
  add("pim1+pim" + std::to_string(a->pims().size()), rep::direct_sum(a->pims().front().module, a->pims().back().module));
  for (std::size_t i = 0; i < a->simples().size(); ++i)
    add("simple" + std::to_string(i + 1), a->simples().simple(i));
  add("regular/(u)", rep::quotient(reg, rep::spin(reg, {la::FpVector(g->order(), 1)})));

  const grp::Subgroup s = grp::sylow_subgroup(g, p);
  const auto triv_s = rep::trivial_module(s.group(), f);
  add("trivial_induced_from_sylow", rep::induce(triv_s, s));
  add("pim1_restricted_induced", rep::induce(rep::restrict(a->pims().front().module, s), s));
  for (const auto& c : grp::cyclic_subgroup_classes(g))
    if (c.order() > 1 && c.order() % p != 0) {
      add("trivial_induced_from_p'_cyclic", rep::induce(rep::trivial_module(c.group(), f), c));
      break;
    }

  const auto& p1 = a->pims().front().module;
  add("pim1/random_cyclic", rep::quotient(p1, rep::spin(p1, {random_vector(f, p1.dim(), rng)})));
  const auto ext = rep::direct_sum(p1, a->simples().simple(a->simples().size() - 1));
  {
    const auto sub = rep::spin(ext, {random_vector(f, ext.dim(), rng)});
    if (sub.dim() > 0) add("random_cyclic_in_pim1+simple", rep::submodule(ext, sub).module);
  }
  {
    const auto j = a->radical_image(reg);
    const auto basis = j.basis();
    if (basis.rank > 0) {
      la::FpVector v(reg.dim(), 0);
      for (std::size_t r = 0; r < basis.rank; ++r) {
        const auto c = static_cast<la::Residue>(rng() % p);
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = f.add(v[k], f.mul(c, basis.reduced(r, k)));
      }
      add("regular/random_radical_cyclic", rep::quotient(reg, rep::spin(reg, {v})));
    }
  }
  add("simple_last_tensor_pim1", rep::tensor_diagonal(a->simples().simple(a->simples().size() - 1), p1));
  return out;
}

ProjectivityVerdicts projectivity_verdicts(const rep::RepModule& m, std::uint64_t seed) {
  const std::uint32_t p = m.field().p();
  ProjectivityVerdicts v{};
  v.full = rep::is_projective(m, seed);
  v.sylow = rep::is_projective(rep::restrict(m, grp::sylow_subgroup(m.group(), p)), seed);
  v.elementary = true;
  for (const auto& e : grp::elementary_abelian_subgroups(m.group(), p))
    if (e.maximal) v.elementary = v.elementary && rep::is_projective(rep::restrict(m, e.subgroup), seed);
  return v;
}

}  // namespace modcartan::verify
