#include <doctest.h>

#include <modcartan/error.hpp>
#include <modcartan/groupalg/group_algebra.hpp>
#include <modcartan/groupalg/ideals.hpp>
#include <modcartan/groups/subgroups.hpp>

#include "support/oracle.hpp"

using namespace modcartan;
using namespace modcartan::alg;
using la::ChainRing;
using la::parse_coeff_spec;

namespace {

const std::vector<std::string> kCorpusGroups = {"C2", "C3",        "C4", "C6", "C8",  "C12", "C2xC2", "C2xC4",
                                                "C2xC2xC2", "D8", "Q8", "S3", "S4", "A4",  "D12"};

GroupAlgebra field_alg(const std::string& g, std::uint32_t p) {
  return GroupAlgebra(grp::parse_group_spec(g), ChainRing::field(p));
}

bool is_p_power(std::size_t n, std::uint32_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

TEST_SUITE("groupalg") {
  TEST_CASE("basis multiplication follows the Cayley table") {
    auto a = field_alg("S3", 3);
    const auto& g = *a.group();
    for (grp::Elem x = 0; x < 6; ++x) {
      CHECK(a.one() * a.basis(x) == a.basis(x));
      for (grp::Elem y = 0; y < 6; ++y) CHECK(a.basis(x) * a.basis(y) == a.basis(g.mul(x, y)));
    }
  }

  TEST_CASE("u squared is |pi| u, zero exactly when p divides |pi|") {
    for (const auto& spec : kCorpusGroups)
      for (std::uint32_t p : {2u, 3u, 5u}) {
        auto a = field_alg(spec, p);
        const auto u = a.group_sum();
        CHECK(u * u == u.scaled(a.coeff().from_int(static_cast<std::int64_t>(a.dim()))));
        CHECK((u * u).is_zero() == (a.dim() % p == 0));
      }
  }

  TEST_CASE("mismatched parents are rejected") {
    auto a = field_alg("C2", 2), b = field_alg("C2", 3);
    CHECK_THROWS_AS(a.one() * b.one(), ParentMismatch);
    CHECK_THROWS_AS(a.element({0, 2}), InvalidArgument);
  }

  TEST_CASE("radical examples") {
    CHECK(radical(field_alg("S3", 3)).length() == 4);
    auto c2 = field_alg("C2", 2);
    auto r = radical(c2);
    CHECK(r.length() == 1);
    CHECK(r.contains(c2.one() + c2.basis(1)));
    CHECK(radical(field_alg("C3", 2)).is_zero());
    CHECK(radical(field_alg("S4", 5)).is_zero());
    CHECK_THROWS_AS(radical(GroupAlgebra(grp::parse_group_spec("C2"), parse_coeff_spec("Z/2^2"))), InvalidArgument);
  }

  TEST_CASE("radical dimension agrees with the brute-force nilpotency oracle") {
    for (const auto& [spec, p] : std::vector<std::pair<std::string, std::uint32_t>>{
             {"C2", 2}, {"C3", 2}, {"C4", 2}, {"C2xC2", 2}, {"C6", 2}, {"S3", 2}, {"C3", 3}, {"C2", 3},
             {"C4", 3}, {"C2xC2", 3}, {"S3", 3}, {"C6", 3}, {"C2", 5}, {"C4", 5}}) {
      CAPTURE(spec);
      CAPTURE(p);
      auto a = field_alg(spec, p);
      CHECK(radical(a).length() == oracle::radical_dim(a.group()->table(), static_cast<int>(p)));
    }
  }

  TEST_CASE("chain ring radicals") {
    auto z4c1 = GroupAlgebra(grp::parse_group_spec("C1"), parse_coeff_spec("Z/2^2"));
    auto r1 = radical_chain(z4c1);
    CHECK(r1.length() == 1);  // 2 Z/4, two elements
    CHECK(r1.contains(z4c1.element({2})));
    CHECK_FALSE(r1.contains(z4c1.one()));
    auto z4c2 = GroupAlgebra(grp::parse_group_spec("C2"), parse_coeff_spec("Z/2^2"));
    auto r2 = radical_chain(z4c2);
    CHECK(r2.length() == 3);  // Z/4[C2] / rad = F2
    CHECK(r2.contains(z4c2.element({1, 1})));
    CHECK(r2.contains(z4c2.element({2, 0})));
    CHECK_FALSE(r2.contains(z4c2.element({1, 0})));
    // rad over F3[t]/t^2 reduces to rad over F3
    auto chain = GroupAlgebra(grp::parse_group_spec("S3"), parse_coeff_spec("F3[t]/t^2"));
    auto rc = radical_chain(chain);
    auto rf = radical(field_alg("S3", 3));
    const auto& form = rc.span().form();
    la::Subspace reduced(la::PrimeField(3), 6);
    for (std::size_t i = 0; i < form.rows(); ++i) {
      la::FpVector v(6);
      for (std::size_t k = 0; k < 6; ++k) v[k] = chain.coeff().residue(form(i, k));
      reduced.insert(v);
    }
    CHECK(reduced.dim() == rf.length());
    for (const auto& g : rf.generators()) {
      la::FpVector v(g.coeffs().begin(), g.coeffs().end());
      CHECK(reduced.contains(v));
    }
    CHECK(rc.length() == 6 + rf.length());  // u R[pi] plus a lift of rad(k pi)
  }

  TEST_CASE("radical is seed independent and nilpotent") {
    for (const auto& spec : kCorpusGroups)
      for (std::uint32_t p : {2u, 3u}) {
        auto a = field_alg(spec, p);
        const auto r1 = radical(a, 1);
        CHECK(radical(a, 2) == r1);
        CHECK(radical(a, 3) == r1);
        const auto d = nilpotency_index(r1, a.dim() + 1);
        REQUIRE(d.has_value());
        CHECK(*d <= a.dim());
        CHECK(is_left_closed(r1));
        CHECK(is_right_closed(r1));
      }
  }

  TEST_CASE("Maschke in both directions") {
    for (const auto& spec : kCorpusGroups)
      for (std::uint32_t p : {2u, 3u, 5u}) {
        auto a = field_alg(spec, p);
        CHECK(radical(a).is_zero() == (a.dim() % p != 0));
        if (a.dim() % p == 0) CHECK(radical(a).contains(a.group_sum()));
      }
  }

  TEST_CASE("p-groups: radical is the augmentation ideal of codimension one") {
    for (const auto& spec : kCorpusGroups)
      for (std::uint32_t p : {2u, 3u, 5u}) {
        auto a = field_alg(spec, p);
        if (!is_p_power(a.dim(), p)) continue;
        CAPTURE(spec);
        const auto r = radical(a);
        CHECK(r.length() == a.dim() - 1);
        CHECK(augmentation_ideal(a, grp::whole_group(a.group())) == r);
        CHECK(semisimple_primitive_idempotents(a).size() == 1);
      }
  }

  TEST_CASE("augmentation ideals") {
    auto a = field_alg("S3", 3);
    CHECK(augmentation_ideal(a, grp::trivial_subgroup(a.group())).is_zero());
    auto i = augmentation_ideal(a, grp::sylow_subgroup(a.group(), 3));
    CHECK(i.side() == Sidedness::TwoSided);
    CHECK(nilpotency_index(i, 10) == std::optional<std::size_t>(3));
    CHECK_FALSE(ideal_product(i, i).is_zero());
    CHECK(ideal_product(ideal_product(i, i), i).is_zero());
  }

  TEST_CASE("semisimple idempotents") {
    auto c3 = field_alg("C3", 2);
    CHECK(semisimple_primitive_idempotents(c3).size() == 2);
    auto c2 = field_alg("C2", 2);
    auto e = semisimple_primitive_idempotents(c2);
    REQUIRE(e.size() == 1);
    CHECK(radical(c2).contains(e[0].element - c2.one()));
  }

  TEST_CASE("idempotent families are orthogonal and sum to one modulo the radical") {
    for (const auto& spec : kCorpusGroups)
      for (std::uint32_t p : {2u, 3u, 5u}) {
        auto a = field_alg(spec, p);
        const auto j = radical(a);
        const auto es = semisimple_primitive_idempotents(a);
        auto total = a.zero();
        for (std::size_t x = 0; x < es.size(); ++x) {
          total = total + es[x].element;
          CHECK(j.contains(es[x].element * es[x].element - es[x].element));
          for (std::size_t y = 0; y < es.size(); ++y)
            if (x != y) CHECK(j.contains(es[x].element * es[y].element));
        }
        CHECK(j.contains(total - a.one()));
      }
  }

  TEST_CASE("idempotent lifting") {
    auto z4 = parse_coeff_spec("Z/2^2");
    auto a = GroupAlgebra(grp::parse_group_spec("C3"), z4);
    const auto n = radical_chain(a);
    auto f = field_alg("C3", 2);
    CHECK(lift_idempotent(a.one(), n) == a.one());
    for (const auto& e : semisimple_primitive_idempotents(f)) {
      la::ChainVector c(e.element.coeffs().begin(), e.element.coeffs().end());
      const auto lifted = lift_idempotent(a.element(c), n);
      CHECK(lifted * lifted == lifted);
      for (grp::Elem g = 0; g < 3; ++g) CHECK(z4.residue(lifted.coeff(g)) == e.element.coeff(g));
      const auto other = a.one() - lifted;
      CHECK((lifted * other).is_zero());
      CHECK((other * lifted).is_zero());
    }
    CHECK_THROWS_AS(lift_idempotent(a.basis(1), n), NotApproxIdempotent);
  }

  TEST_CASE("lifting commutes with reduction on chain corpus algebras") {
    for (const char* spec : {"C2", "C6", "S3", "A4", "C2xC2"})
      for (const char* coeff : {"Z/2^2", "Z/3^3", "F3[t]/t^2", "Z/5^2"}) {
        auto ring = parse_coeff_spec(coeff);
        auto g = grp::parse_group_spec(spec);
        auto a = GroupAlgebra(g, ring);
        auto f = GroupAlgebra(g, ChainRing::field(ring.p()));
        const auto n = radical_chain(a);
        for (const auto& e : semisimple_primitive_idempotents(f)) {
          la::ChainVector c(e.element.coeffs().begin(), e.element.coeffs().end());
          const auto lifted = lift_idempotent(a.element(c), n);
          CHECK(lifted * lifted == lifted);
          const auto diff = lifted - a.element(c);
          CHECK(n.contains(diff));
        }
      }
  }
}
