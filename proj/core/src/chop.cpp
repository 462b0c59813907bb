#include "modcartan/modrep/chop.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

#include "modcartan/error.hpp"
#include "modcartan/modrep/hom.hpp"

namespace modcartan::rep {

namespace {

constexpr int kRandomAttempts = 64;
constexpr std::size_t kFallbackMaxDim = 12;
constexpr std::uint32_t kFallbackMaxPrime = 3;
constexpr std::size_t kFallbackBudget = 4096;

FpMatrix random_word(const RepModule& m, std::mt19937_64& rng) {
  const auto& gens = m.generator_actions();
  const std::size_t len = 1 + rng() % 3;
  FpMatrix w = gens[rng() % gens.size()];
  for (std::size_t i = 1; i < len; ++i) w = w * gens[rng() % gens.size()];
  return w;
}

FpMatrix random_theta(const RepModule& m, std::mt19937_64& rng) {
  const auto& f = m.field();
  FpMatrix theta = FpMatrix::identity(f, m.dim()).scaled(static_cast<la::Residue>(rng() % f.p()));
  for (int k = 0; k < 3; ++k) {
    const auto c = static_cast<la::Residue>(rng() % f.p());
    if (c != 0) theta = theta + random_word(m, rng).scaled(c);
  }
  return theta;
}

la::Subspace spin_with(const std::vector<FpMatrix>& actions, PrimeField field, std::size_t dim,
                       const FpVector& v) {
  la::Subspace s(field, dim);
  std::vector<FpVector> queue;
  if (s.insert(v)) queue.push_back(v);
  for (std::size_t head = 0; head < queue.size() && s.dim() < dim; ++head)
    for (const auto& a : actions) {
      FpVector w = a.apply(queue[head]);
      if (s.insert(w)) queue.push_back(std::move(w));
    }
  return s;
}

// {v : w . v = 0 for all w in s}; a submodule of m when s is invariant under
// the transposed action.
la::Subspace annihilator(const la::Subspace& s) {
  const auto basis = s.basis();
  const FpMatrix rows = basis.reduced.block(0, 0, basis.rank, s.ambient_dim());
  const FpMatrix null = la::nullspace(rows);
  la::Subspace out(s.field(), s.ambient_dim());
  for (std::size_t r = 0; r < null.rows(); ++r) out.insert(null.row_vector(r));
  return out;
}

FpVector random_combination(const FpMatrix& rows, std::mt19937_64& rng) {
  const auto& f = rows.field();
  FpVector v(rows.cols(), 0);
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    const auto c = static_cast<la::Residue>(rng() % f.p());
    if (c == 0) continue;
    for (std::size_t j = 0; j < rows.cols(); ++j) v[j] = f.add(v[j], f.mul(c, rows(r, j)));
  }
  return v;
}

bool is_zero_vector(const FpVector& v) {
  return std::all_of(v.begin(), v.end(), [](la::Residue x) { return x == 0; });
}

std::optional<SplitResult> try_theta(const RepModule& m, const std::vector<FpMatrix>& transposed,
                                     const FpMatrix& theta, std::mt19937_64& rng) {
  const std::size_t n = m.dim();
  for (const auto& [f, e] : la::factor_poly(la::charpoly(theta))) {
    const FpMatrix ftheta = la::evaluate(f, theta);
    const FpMatrix kernel = la::nullspace(ftheta);
    const auto deg = static_cast<std::size_t>(f.degree());
    std::vector<FpVector> candidates{kernel.row_vector(0)};
    if (kernel.rows() > deg)
      for (int k = 0; k < 2; ++k) {
        FpVector v = random_combination(kernel, rng);
        if (!is_zero_vector(v)) candidates.push_back(std::move(v));
      }
    for (const auto& v : candidates) {
      la::Subspace s = spin(m, {v});
      if (s.dim() < n) return SplitResult{std::move(s), false};
    }
    if (kernel.rows() != deg) continue;
    const FpMatrix tkernel = la::nullspace(ftheta.transpose());
    const la::Subspace dual = spin_with(transposed, m.field(), n, tkernel.row_vector(0));
    if (dual.dim() < n) return SplitResult{annihilator(dual), false};
    return SplitResult{std::nullopt, true};
  }
  return std::nullopt;
}

std::vector<FpMatrix> word_basis(const RepModule& m) {
  std::vector<FpMatrix> basis{FpMatrix::identity(m.field(), m.dim())};
  auto add = [&](FpMatrix w) {
    if (std::find(basis.begin(), basis.end(), w) == basis.end()) basis.push_back(std::move(w));
  };
  for (const auto& a : m.generator_actions()) add(a);
  for (const auto& a : m.generator_actions())
    for (const auto& b : m.generator_actions()) add(a * b);
  return basis;
}

}  // namespace

SplitResult split_module(const RepModule& m, std::mt19937_64& rng) {
  const std::size_t n = m.dim();
  if (n == 0) throw InvalidArgument("cannot split the zero module");
  if (n == 1) return {std::nullopt, true};
  if (m.generator_actions().empty()) {
    FpVector e0(n, 0);
    e0[0] = 1;
    return {la::Subspace::spanned_by(m.field(), n, {e0}), false};
  }
  std::vector<FpMatrix> transposed;
  for (const auto& a : m.generator_actions()) transposed.push_back(a.transpose());

  for (int attempt = 0; attempt < kRandomAttempts; ++attempt)
    if (auto r = try_theta(m, transposed, random_theta(m, rng), rng)) return std::move(*r);

  if (n <= kFallbackMaxDim && m.field().p() <= kFallbackMaxPrime) {
    const auto basis = word_basis(m);
    const std::uint32_t p = m.field().p();
    std::vector<la::Residue> c(basis.size(), 0);
    for (std::size_t tried = 0; tried < kFallbackBudget; ++tried) {
      std::size_t i = 0;  // next coefficient vector in lexicographic order
      while (i < c.size() && ++c[i] == p) c[i++] = 0;
      if (i == c.size()) break;
      FpMatrix theta(m.field(), n, n);
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (c[k] != 0) theta = theta + basis[k].scaled(c[k]);
      if (auto r = try_theta(m, transposed, theta, rng)) return std::move(*r);
    }
  }
  throw IrreducibilityUndecided("could not split or certify a module of dimension " +
                                std::to_string(n) + " over " + m.field().to_string());
}

std::vector<RepModule> composition_factors(const RepModule& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RepModule> out;
  std::function<void(const RepModule&)> rec = [&](const RepModule& x) {
    if (x.dim() == 0) return;
    auto r = split_module(x, rng);
    if (r.irreducible) {
      out.push_back(x);
      return;
    }
    rec(submodule(x, *r.submodule).module);
    rec(quotient(x, *r.submodule));
  };
  rec(m);
  return out;
}

la::Subspace simple_submodule(const RepModule& m, std::uint64_t seed) {
  if (m.dim() == 0) throw InvalidArgument("the zero module has no simple submodule");
  std::mt19937_64 rng(seed);
  RepModule current = m;
  FpMatrix basis = FpMatrix::identity(m.field(), m.dim());  // rows: current basis in m
  for (;;) {
    auto r = split_module(current, rng);
    if (r.irreducible) {
      std::vector<FpVector> rows;
      for (std::size_t i = 0; i < basis.rows(); ++i) rows.push_back(basis.row_vector(i));
      return la::Subspace::spanned_by(m.field(), m.dim(), rows);
    }
    auto sub = submodule(current, *r.submodule);
    basis = sub.basis.reduced.block(0, 0, sub.basis.rank, current.dim()) * basis;
    current = std::move(sub.module);
  }
}

bool is_irreducible(const RepModule& m, std::uint64_t seed) {
  if (m.dim() == 0) return false;
  std::mt19937_64 rng(seed);
  return split_module(m, rng).irreducible;
}

std::vector<la::FpPoly> fingerprint(const RepModule& m) {
  std::vector<la::FpPoly> out;
  for (const auto& cls : m.group()->conjugacy_classes()) out.push_back(la::charpoly(m.action(cls.front())));
  return out;
}

namespace {

std::size_t kernel_size(const RepModule& m) {
  std::size_t k = 0;
  for (grp::Elem g = 0; g < m.group()->order(); ++g) k += m.action(g).is_identity();
  return k;
}

}  // namespace

SimpleRegistry SimpleRegistry::build(const grp::GroupPtr& g, PrimeField field, std::uint64_t seed) {
  struct Entry {
    RepModule module;
    std::vector<la::FpPoly> fp;
    std::size_t kernel;
    std::size_t discovered;
  };
  std::vector<Entry> entries;
  for (auto& s : composition_factors(regular_module(g, field), seed)) {
    auto fp = fingerprint(s);
    const bool known = std::any_of(entries.begin(), entries.end(), [&](const Entry& e) {
      return e.module.dim() == s.dim() && e.fp == fp && hom_dim(e.module, s) > 0;
    });
    if (known) continue;
    const std::size_t k = kernel_size(s);
    entries.push_back({s.with_provenance(Provenance::Derived), std::move(fp), k, entries.size()});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::forward_as_tuple(a.module.dim(), b.kernel, a.fp, a.discovered) <
           std::forward_as_tuple(b.module.dim(), a.kernel, b.fp, b.discovered);
  });
  SimpleRegistry reg;
  reg.group_ = g;
  reg.field_ = field;
  for (auto& e : entries) {
    reg.endo_.push_back(hom_dim(e.module, e.module));
    reg.fingerprints_.push_back(std::move(e.fp));
    reg.simples_.push_back(std::move(e.module));
  }
  return reg;
}

std::vector<std::size_t> SimpleRegistry::dims() const {
  std::vector<std::size_t> out;
  for (const auto& s : simples_) out.push_back(s.dim());
  return out;
}

std::size_t SimpleRegistry::identify(const RepModule& s) const {
  const auto fp = fingerprint(s);
  for (std::size_t i = 0; i < simples_.size(); ++i)
    if (simples_[i].dim() == s.dim() && fingerprints_[i] == fp && hom_dim(simples_[i], s) > 0) return i;
  throw InternalError("composition factor of dimension " + std::to_string(s.dim()) +
                      " matches no registered simple module");
}

CompositionMultiset chop(const RepModule& m, const SimpleRegistry& registry, std::uint64_t seed) {
  if (!(m.field() == registry.field()) || !(*m.group() == *registry.group()))
    throw ParentMismatch("module and registry belong to different algebras");
  CompositionMultiset counts(registry.size(), 0);
  for (const auto& s : composition_factors(m, seed)) ++counts[registry.identify(s)];
  return counts;
}

std::size_t multiset_dim(const CompositionMultiset& c, const SimpleRegistry& registry) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < c.size(); ++i) d += static_cast<std::size_t>(c[i]) * registry.dim(i);
  return d;
}

std::string multiset_to_string(const CompositionMultiset& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "]";
}

}  // namespace modcartan::rep
