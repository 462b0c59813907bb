#include <benchmark/benchmark.h>

#include <modcartan/artinring/chain_cartan.hpp>
#include <modcartan/exactla/chain_matrix.hpp>
#include <modcartan/grothendieck/grothendieck.hpp>
#include <modcartan/modrep/modular_algebra.hpp>

#include <random>

using namespace modcartan;

namespace {

la::ChainMatrix random_chain_matrix(const la::ChainRing& ring, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, ring.size() - 1);
  std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(n));
  for (auto& r : rows)
    for (auto& x : r) x = dist(rng);
  return la::ChainMatrix::from_codes(ring, rows);
}

void BM_HowellForm(benchmark::State& state) {
  const auto ring = la::parse_coeff_spec("Z/3^3");
  const auto m = random_chain_matrix(ring, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(la::howell_form(m));
}
BENCHMARK(BM_HowellForm)->Arg(8)->Arg(24)->Arg(48);

void BM_ModularAlgebraBuild(benchmark::State& state) {
  auto g = grp::parse_group_spec("S4");
  for (auto _ : state) {
    rep::ModularAlgebra ma(g, la::PrimeField(static_cast<std::uint32_t>(state.range(0))), 1);
    benchmark::DoNotOptimize(ma.pim_dims());
  }
}
BENCHMARK(BM_ModularAlgebraBuild)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ChopRegular(benchmark::State& state) {
  auto g = grp::parse_group_spec("S4");
  const auto p = static_cast<std::uint32_t>(state.range(0));
  auto ma = rep::ModularAlgebra::get(g, p);
  const auto reg = rep::regular_module(g, la::PrimeField(p));
  for (auto _ : state) benchmark::DoNotOptimize(ma->chop(reg));
}
BENCHMARK(BM_ChopRegular)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_CartanMatrix(benchmark::State& state) {
  auto g = grp::parse_group_spec("A4");
  for (auto _ : state) benchmark::DoNotOptimize(gk::cartan_matrix(g, 2));
}
BENCHMARK(BM_CartanMatrix)->Unit(benchmark::kMicrosecond);

void BM_CartanChain(benchmark::State& state) {
  auto g = grp::parse_group_spec("S3");
  const auto ring = la::parse_coeff_spec("Z/3^3");
  for (auto _ : state) benchmark::DoNotOptimize(ar::cartan_chain(g, ring));
}
BENCHMARK(BM_CartanChain)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
