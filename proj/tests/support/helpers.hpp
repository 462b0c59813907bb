#pragma once

#include <modcartan/modrep/rep_module.hpp>

#include <random>

#include "oracle.hpp"

namespace testing_support {

inline oracle::Module to_oracle(const modcartan::rep::RepModule& m) {
  oracle::Module out{{}, m.dim()};
  for (const auto& g : m.generator_actions()) {
    oracle::Mat a(g.rows(), oracle::Vec(g.cols()));
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) a[i][j] = static_cast<int>(g(i, j));
    out.gens.push_back(std::move(a));
  }
  return out;
}

/// Composition multiset in registry order, computed by the oracle and matched
/// against the registry simples by oracle hom spaces.
template <class Registry>
std::vector<int> oracle_chop(const modcartan::rep::RepModule& m, const Registry& reg) {
  const int p = static_cast<int>(m.field().p());
  std::vector<oracle::Module> simples;
  for (std::size_t i = 0; i < reg.size(); ++i) simples.push_back(to_oracle(reg.simple(i)));
  std::vector<int> out(reg.size(), 0);
  for (const auto& f : oracle::composition_factors(to_oracle(m), p)) {
    int hit = -1;
    for (std::size_t i = 0; i < simples.size(); ++i)
      if (oracle::simples_isomorphic(f, simples[i], p)) {
        if (hit >= 0) return {};  // two registry entries isomorphic: report mismatch
        hit = static_cast<int>(i);
      }
    if (hit < 0) return {};
    ++out[static_cast<std::size_t>(hit)];
  }
  return out;
}

inline modcartan::la::FpMatrix random_fp(modcartan::la::PrimeField f, std::size_t r, std::size_t c,
                                         std::mt19937_64& rng) {
  modcartan::la::FpMatrix m(f, r, c);
  std::uniform_int_distribution<std::uint32_t> d(0, f.p() - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = d(rng);
  return m;
}

inline modcartan::la::FpMatrix random_invertible(modcartan::la::PrimeField f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    auto m = random_fp(f, n, n, rng);
    if (modcartan::la::rank(m) == n) return m;
  }
}

}  // namespace testing_support
