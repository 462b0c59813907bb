#pragma once

// Brute-force reference implementations used to cross-check the library.
// Nothing here calls into modcartan; matrices are plain nested vectors of
// residues and all linear algebra is redone from scratch.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;
using Mat = std::vector<Vec>;  // row-major, square unless noted

inline int md(long long a, int p) { return static_cast<int>(((a % p) + p) % p); }

inline int inv_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  return 0;
}

inline Mat mul(const Mat& a, const Mat& b, int p) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  Mat c(n, Vec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (a[i][t])
        for (std::size_t j = 0; j < m; ++j) c[i][j] = (c[i][j] + a[i][t] * b[t][j]) % p;
  return c;
}

inline Vec apply(const Mat& a, const Vec& v, int p) {
  Vec out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    long long s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += static_cast<long long>(a[i][j]) * v[j];
    out[i] = md(s, p);
  }
  return out;
}

/// Row echelon form in place; returns the rank.
inline std::size_t echelon(Mat& m, int p) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const int s = inv_mod(m[rank][c], p);
    for (auto& x : m[rank]) x = x * s % p;
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != rank && m[r][c]) {
        const int f = m[r][c];
        for (std::size_t j = 0; j < cols; ++j) m[r][j] = md(m[r][j] - f * m[rank][j], p);
      }
    ++rank;
  }
  m.resize(rank);
  return rank;
}

inline std::size_t rank(Mat m, int p) { return echelon(m, p); }

/// Basis of the span of the vectors closed under the generators.
inline Mat spin(const std::vector<Mat>& gens, const Vec& v, int p) {
  Mat basis;
  std::vector<Vec> queue{v};
  Mat ech;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    Mat trial = ech;
    trial.push_back(queue[h]);
    if (echelon(trial, p) == ech.size()) continue;
    ech = trial;
    basis.push_back(queue[h]);
    for (const auto& g : gens) queue.push_back(apply(g, queue[h], p));
  }
  return basis;
}

inline std::optional<Mat> inverse(const Mat& a, int p) {
  const std::size_t n = a.size();
  Mat m(n, Vec(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  Mat e = m;
  if (echelon(e, p) != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (e[i][i] != 1) return std::nullopt;
  Mat out(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = e[i][n + j];
  return out;
}

struct Module {
  std::vector<Mat> gens;
  std::size_t dim;
};

/// Splits m along an invariant subspace w (basis given as vectors): returns
/// (submodule, quotient) after an explicit change of basis.
inline std::pair<Module, Module> split(const Module& m, const Mat& w, int p) {
  const std::size_t n = m.dim, k = w.size();
  Mat cols = w;  // columns of the new basis, stored as rows here
  for (std::size_t e = 0; e < n && cols.size() < n; ++e) {
    Vec v(n, 0);
    v[e] = 1;
    Mat trial = cols;
    trial.push_back(v);
    if (rank(trial, p) == trial.size()) cols.push_back(v);
  }
  Mat b(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i][j] = cols[j][i];
  const Mat binv = *inverse(b, p);
  Module sub{{}, k}, quo{{}, n - k};
  for (const auto& g : m.gens) {
    const Mat t = mul(mul(binv, g, p), b, p);
    Mat s(k, Vec(k)), q(n - k, Vec(n - k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) s[i][j] = t[i][j];
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j) q[i - k][j - k] = t[i][j];
    sub.gens.push_back(std::move(s));
    quo.gens.push_back(std::move(q));
  }
  return {sub, quo};
}

/// Every simple submodule is cyclic, so the smallest spin over all nonzero
/// vectors is simple; recurse on sub and quotient. Exhaustive in p^dim.
inline std::vector<Module> composition_factors(const Module& m, int p) {
  if (m.dim == 0) return {};
  Mat best;
  Vec v(m.dim, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < m.dim && ++v[i] == p) v[i++] = 0;
    if (i == m.dim) break;
    Mat s = spin(m.gens, v, p);
    if (best.empty() || s.size() < best.size()) best = std::move(s);
    if (best.size() == 1) break;
  }
  if (best.size() == m.dim) return {m};
  auto [sub, quo] = split(m, best, p);
  auto out = composition_factors(sub, p);
  auto rest = composition_factors(quo, p);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

/// dim of {X : X A_s = B_s X for all generators s}, by direct elimination.
inline std::size_t hom_dim(const Module& a, const Module& b, int p) {
  const std::size_t da = a.dim, db = b.dim, n = da * db;
  if (n == 0) return 0;
  Mat sys;
  for (std::size_t s = 0; s < a.gens.size(); ++s)
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < da; ++j) {
        Vec row(n, 0);  // X(i, t) at i * da + t
        for (std::size_t t = 0; t < da; ++t) row[i * da + t] = md(row[i * da + t] + a.gens[s][t][j], p);
        for (std::size_t t = 0; t < db; ++t) row[t * da + j] = md(row[t * da + j] - b.gens[s][i][t], p);
        sys.push_back(std::move(row));
      }
  return n - rank(sys, p);
}

/// For simple modules: isomorphic iff equal dimension and a nonzero hom.
inline bool simples_isomorphic(const Module& a, const Module& b, int p) {
  return a.dim == b.dim && hom_dim(a, b, p) > 0;
}

/// Leibniz expansion over all permutations.
inline long long det_leibniz(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0;
  do {
    long long term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Every R-combination of the rows, for R = Z/q (q = p^t); exhaustive.
inline std::set<std::vector<std::uint64_t>> span_zmod(const std::vector<std::vector<std::uint64_t>>& rows,
                                                      std::size_t ambient, std::uint64_t q) {
  std::set<std::vector<std::uint64_t>> out{std::vector<std::uint64_t>(ambient, 0)};
  for (const auto& r : rows) {
    std::set<std::vector<std::uint64_t>> next;
    for (const auto& v : out)
      for (std::uint64_t c = 0; c < q; ++c) {
        auto w = v;
        for (std::size_t i = 0; i < ambient; ++i) w[i] = (w[i] + c * r[i]) % q;
        next.insert(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

/// Jacobson radical of F_p[G] for a Cayley table, as the set of a with a x
/// nilpotent for every x; returns its dimension (log_p of its size).
inline std::size_t radical_dim(const std::vector<std::vector<std::uint32_t>>& table, int p) {
  const std::size_t n = table.size();
  auto product = [&](const Vec& a, const Vec& b) {
    Vec c(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (a[i])
        for (std::size_t j = 0; j < n; ++j)
          if (b[j]) c[table[i][j]] = (c[table[i][j]] + a[i] * b[j]) % p;
    return c;
  };
  auto nilpotent = [&](const Vec& a) {
    Vec x = a;
    for (std::size_t k = 0; k < n + 1; ++k) {
      if (std::all_of(x.begin(), x.end(), [](int v) { return v == 0; })) return true;
      x = product(x, a);
    }
    return false;
  };
  std::vector<Vec> all;
  Vec v(n, 0);
  all.push_back(v);
  for (;;) {
    std::size_t i = 0;
    while (i < n && ++v[i] == p) v[i++] = 0;
    if (i == n) break;
    all.push_back(v);
  }
  std::size_t count = 0;
  for (const auto& a : all) {
    bool in = true;
    for (const auto& x : all)
      if (!nilpotent(product(a, x))) {
        in = false;
        break;
      }
    count += in;
  }
  std::size_t d = 0;
  while (count > 1) {
    count /= static_cast<std::size_t>(p);
    ++d;
  }
  return d;
}

}  // namespace oracle
