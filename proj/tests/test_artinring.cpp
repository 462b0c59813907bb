#include <doctest.h>

#include <modcartan/artinring/chain_cartan.hpp>
#include <modcartan/artinring/chain_module.hpp>
#include <modcartan/artinring/normal_sylow.hpp>
#include <modcartan/error.hpp>
#include <modcartan/groups/subgroups.hpp>
#include <modcartan/modrep/modular_algebra.hpp>
#include <modcartan/modrep/module_io.hpp>

#include <random>

#include "support/oracle.hpp"

using namespace modcartan;
using namespace modcartan::ar;
using la::parse_coeff_spec;
using la::PrimeField;

namespace {

const std::vector<std::string> kCorpusGroups = {"C2", "C3",        "C4", "C6", "C8",  "C12", "C2xC2", "C2xC4",
                                                "C2xC2xC2", "D8", "Q8", "S3", "S4", "A4",  "D12"};
const std::vector<std::string> kChainRings = {"Z/{p}^2", "Z/{p}^3", "F{p}[t]/t^2"};

grp::GroupPtr G(const std::string& s) { return grp::parse_group_spec(s); }

ChainRing ring_for(const std::string& tmpl, std::uint32_t p) {
  std::string s = tmpl;
  s.replace(s.find("{p}"), 3, std::to_string(p));
  return parse_coeff_spec(s);
}

rep::CompositionMultiset times(rep::CompositionMultiset c, int k) {
  for (auto& x : c) x *= k;
  return c;
}

}  // namespace

TEST_SUITE("artinring") {
  TEST_CASE("reduction modulo the maximal ideal") {
    auto g = G("C2");
    auto z4 = parse_coeff_spec("Z/2^2");
    const auto red = reduce_mod_max(chain_regular_module(g, z4));
    CHECK(red.generator_actions() == rep::regular_module(g, PrimeField(2)).generator_actions());
    auto s3 = G("S3");
    auto z9 = parse_coeff_spec("Z/3^2");
    const auto a = chain_regular_module(s3, z9);
    const auto pims = chain_pims(s3, z9);
    const auto sum = direct_sum(a, pims[0].module);
    CHECK(reduce_mod_max(sum).generator_actions() ==
          rep::direct_sum(reduce_mod_max(a), reduce_mod_max(pims[0].module)).generator_actions());
  }

  TEST_CASE("lifted PIMs reduce to the field PIMs") {
    for (const auto& spec : {"S3", "A4", "C6", "D12", "C2xC2"})
      for (std::uint32_t p : {2u, 3u})
        for (const auto& tmpl : kChainRings) {
          auto g = G(spec);
          auto ring = ring_for(tmpl, p);
          auto ma = rep::ModularAlgebra::get(g, p);
          const auto pims = chain_pims(g, ring);
          REQUIRE(pims.size() == ma->pims().size());
          for (std::size_t i = 0; i < pims.size(); ++i) {
            CHECK(pims[i].idempotent * pims[i].idempotent == pims[i].idempotent);
            CHECK(pims[i].module.rank() == ma->pims()[i].module.dim());
            std::vector<int> unit(pims.size(), 0);
            unit[i] = 1;
            CHECK(ma->decompose_projective(reduce_mod_max(pims[i].module)) == unit);
            CHECK(pims[i].module.satisfies_all_relations());
          }
        }
  }

  TEST_CASE("chain PIM examples") {
    auto z4 = parse_coeff_spec("Z/2^2");
    auto c1 = chain_pims(G("C1"), z4);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].module.rank() == 1);
    auto c2 = chain_pims(G("C2"), z4);
    REQUIRE(c2.size() == 1);
    CHECK(c2[0].module.rank() == 2);
    auto s3 = chain_pims(G("S3"), parse_coeff_spec("Z/3^2"));
    REQUIRE(s3.size() == 2);
    CHECK(s3[0].module.rank() == 3);
    CHECK(s3[1].module.rank() == 3);
  }

  TEST_CASE("graded pieces") {
    auto g = G("C2");
    auto f2 = la::ChainRing::field(2);
    const auto field_reg = chain_regular_module(g, f2);
    const auto one = graded_pieces(field_reg);
    REQUIRE(one.pieces.size() == 1);
    CHECK(one.pieces[0].generator_actions() == reduce_mod_max(field_reg).generator_actions());
    const auto z4 = graded_pieces(chain_regular_module(g, parse_coeff_spec("Z/2^2")));
    REQUIRE(z4.pieces.size() == 2);
    auto ma = rep::ModularAlgebra::get(g, 2);
    for (const auto& piece : z4.pieces) {
      CHECK(piece.dim() == 2);
      CHECK(ma->is_projective(piece));
      CHECK(ma->decompose_projective(piece) == std::vector<int>{1});
    }
  }

  TEST_CASE("graded piece bookkeeping on R-free modules") {
    for (const auto& spec : {"S3", "C4", "A4", "Q8", "C6"})
      for (std::uint32_t p : {2u, 3u})
        for (const auto& tmpl : kChainRings) {
          auto g = G(spec);
          auto ring = ring_for(tmpl, p);
          auto ma = rep::ModularAlgebra::get(g, p);
          std::vector<ChainRepModule> mods{chain_regular_module(g, ring)};
          for (const auto& pim : chain_pims(g, ring)) mods.push_back(pim.module);
          for (const auto& m : mods) {
            const auto gp = graded_pieces(m);
            CHECK(gp.pieces.size() == ring.length());
            std::size_t total = 0;
            for (const auto& piece : gp.pieces) {
              CHECK(piece.dim() == m.rank());
              total += piece.dim();
            }
            CHECK(total == ring.length() * m.rank());
            CHECK(chain_composition(m) ==
                  times(ma->chop(reduce_mod_max(m)), static_cast<int>(ring.length())));
          }
        }
  }

  TEST_CASE("spin and subquotients over Z/4") {
    auto g = G("C2");
    auto z4 = parse_coeff_spec("Z/2^2");
    const auto reg = chain_regular_module(g, z4);
    const auto s = spin(reg, {ChainVector{1, 1}});
    CHECK(is_invariant(reg, s));
    CHECK(s.length() == 2);
    // exhaustive: the span of (1,1) and its translates has 4 elements
    CHECK(oracle::span_zmod({{1, 1}, {1, 1}}, 2, 4).size() == 4);
    const auto two = spin(reg, {ChainVector{2, 0}});
    CHECK(two.length() == 2);  // {0, 2} x {0, 2}
    CHECK(oracle::span_zmod({{2, 0}, {0, 2}}, 2, 4).size() == 4);
    const la::RowSpan whole(ChainMatrix::identity(z4, 2));
    const la::RowSpan twice(z4, 2, {ChainVector{2, 0}, ChainVector{0, 2}});
    const auto top = subquotient(reg, whole, twice);
    CHECK(top.generator_actions() == rep::regular_module(g, PrimeField(2)).generator_actions());
    CHECK_THROWS_AS(free_submodule(reg, {ChainVector{2, 0}}), InvalidArgument);
  }

  TEST_CASE("invalid chain modules are rejected") {
    auto g = G("C2");
    auto z4 = parse_coeff_spec("Z/2^2");
    CHECK_THROWS_AS(ChainRepModule(g, z4, 1, {ChainMatrix::from_codes(z4, {{2}})}), InvalidModule);
    CHECK_THROWS_AS(ChainRepModule(G("C3"), z4, 2, {ChainMatrix::from_codes(z4, {{1, 1}, {0, 1}})}), InvalidModule);
    CHECK(ChainRepModule(g, z4, 1, {ChainMatrix::from_codes(z4, {{3}})}).satisfies_all_relations());
  }

  TEST_CASE("chain module files round trip") {
    auto g = G("S3");
    auto ring = parse_coeff_spec("F3[t]/t^2");
    for (const auto& pim : chain_pims(g, ring)) {
      const auto f = to_module_file(pim.module, "S3");
      const auto back = chain_module_from_file(rep::parse_module_json(rep::module_json(f)));
      CHECK(back.generator_actions() == pim.module.generator_actions());
      CHECK(back.ring() == ring);
    }
  }

  TEST_CASE("chain Cartan examples") {
    auto z4 = cartan_chain(G("C2"), parse_coeff_spec("Z/2^2"));
    CHECK(z4.chain.matrix == la::IntMatrix::from_rows({{4}}));
    CHECK(z4.scaling_ok);
    auto s3 = cartan_chain(G("S3"), parse_coeff_spec("F3[t]/t^3"));
    CHECK(s3.chain.matrix == la::IntMatrix::from_rows({{6, 3}, {3, 6}}));
    CHECK(s3.det_chain == 27);
    CHECK(s3.det_field == 3);
    CHECK(s3.det_relation);
    CHECK(s3.scaling_ok);
    auto f = cartan_chain(G("S3"), la::ChainRing::field(3));
    CHECK(f.chain.matrix == f.field.matrix);
  }

  TEST_CASE("scaling law and determinant relation on the chain corpus") {
    for (const auto& spec : kCorpusGroups)
      for (std::uint32_t p : {2u, 3u, 5u})
        for (const auto& tmpl : kChainRings) {
          CAPTURE(spec);
          CAPTURE(tmpl);
          CAPTURE(p);
          const auto c = cartan_chain(G(spec), ring_for(tmpl, p));
          CHECK(c.scaling_ok);
          CHECK(c.det_relation);
          CHECK(c.det_chain != 0);
        }
  }

  TEST_CASE("normal Sylow examples") {
    auto s3 = normal_sylow_checks(G("S3"), la::ChainRing::field(3));
    CHECK(s3.two_sided);
    CHECK(s3.nilpotency == std::optional<std::size_t>(3));
    CHECK(s3.quotient_ok);
    CHECK(s3.radical_ok);
    CHECK(s3.sylow_order == 3);
    CHECK(s3.ideal_length == 4);
    CHECK(s3.radical_length == 4);
    auto z9 = normal_sylow_checks(G("S3"), parse_coeff_spec("Z/3^2"));
    CHECK(z9.two_sided);
    CHECK(z9.quotient_ok);
    CHECK(z9.radical_ok);
    CHECK(z9.nilpotency.has_value());
    auto c2 = normal_sylow_checks(G("C2"), la::ChainRing::field(2));
    CHECK(c2.radical_ok);
    CHECK(c2.quotient_ok);
    CHECK(c2.ideal_length == 1);
    for (const auto& [spec, p] : std::vector<std::pair<std::string, std::uint32_t>>{{"C6", 3}, {"A4", 2}}) {
      auto r = normal_sylow_checks(G(spec), la::ChainRing::field(p));
      CHECK(r.two_sided);
      CHECK(r.nilpotency.has_value());
      CHECK(r.quotient_ok);
      CHECK(r.radical_ok);
    }
    CHECK_THROWS_AS(normal_sylow_checks(G("D12"), la::ChainRing::field(2)), SylowNotNormal);
    CHECK_THROWS_AS(normal_sylow_checks(G("S3"), la::ChainRing::field(2)), SylowNotNormal);
  }

  TEST_CASE("projective lift check") {
    std::mt19937_64 rng(19);
    for (const auto& spec : {"S3", "A4", "C6"})
      for (std::uint32_t p : {2u, 3u}) {
        auto g = G(spec);
        auto ring = ring_for("Z/{p}^2", p);
        const auto pims = chain_pims(g, ring);
        CHECK(projective_lift_check(pims[0].module, pims[0].module).applicable);
        CHECK(projective_lift_check(pims[0].module, pims[0].module).holds);
        for (int trial = 0; trial < 4; ++trial) {
          std::vector<ChainRepModule> xs, ys;
          std::vector<int> coeffs(pims.size());
          for (std::size_t i = 0; i < pims.size(); ++i) {
            coeffs[i] = static_cast<int>(rng() % 2) + (i == 0);
            for (int k = 0; k < coeffs[i]; ++k) xs.push_back(pims[i].module);
          }
          ys.assign(xs.rbegin(), xs.rend());
          const auto r = projective_lift_check(direct_sum(xs, g, ring), direct_sum(ys, g, ring));
          CHECK(r.applicable);
          CHECK(r.holds);
          CHECK(r.head_p == coeffs);
          CHECK(r.head_q == coeffs);
        }
        if (pims.size() > 1) {
          const auto r = projective_lift_check(pims[0].module, pims[1].module);
          CHECK_FALSE(r.applicable);
          CHECK(r.holds);
        }
      }
  }
}
