#include <doctest.h>

#include <modcartan/error.hpp>
#include <modcartan/exactla/chain_matrix.hpp>
#include <modcartan/exactla/fp_matrix.hpp>
#include <modcartan/exactla/fp_poly.hpp>
#include <modcartan/exactla/int_matrix.hpp>

#include <random>

#include "support/helpers.hpp"

using namespace modcartan;
using namespace modcartan::la;

namespace {

// Rank as the size of the largest nonzero minor (Leibniz determinants mod p).
std::size_t minor_rank(const FpMatrix& m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  const long long p = m.field().p();
  for (std::size_t k = n; k > 0; --k) {
    std::vector<bool> rs(m.rows(), false), cs(m.cols(), false);
    std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
      do {
        std::vector<std::vector<long long>> sub;
        for (std::size_t i = 0; i < m.rows(); ++i) {
          if (!rs[i]) continue;
          std::vector<long long> row;
          for (std::size_t j = 0; j < m.cols(); ++j)
            if (cs[j]) row.push_back(m(i, j));
          sub.push_back(row);
        }
        if (((oracle::det_leibniz(sub) % p) + p) % p != 0) return k;
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
  }
  return 0;
}

bool canonical(const FpMatrix& m) {
  for (auto x : m.data())
    if (x >= m.field().p()) return false;
  return true;
}

FpPoly poly(std::uint32_t p, std::vector<Residue> c) { return FpPoly(PrimeField(p), std::move(c)); }

ChainMatrix random_chain(ChainRing r, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  ChainMatrix m(r, rows, cols);
  std::uniform_int_distribution<std::uint64_t> d(0, r.size() - 1);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = d(rng);
  return m;
}

std::set<std::vector<std::uint64_t>> exhaustive_span(const ChainMatrix& m) {
  std::vector<std::vector<std::uint64_t>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row_vector(i));
  return oracle::span_zmod(rows, m.cols(), m.ring().size());
}

}  // namespace

TEST_SUITE("exactla") {
  TEST_CASE("prime field rejects composites and p above the bound") {
    CHECK_THROWS_AS(PrimeField(4), InvalidArgument);
    CHECK_THROWS_AS(PrimeField(67), InvalidArgument);
    PrimeField f(7);
    CHECK(f.mul(f.inv(3), 3) == 1);
    CHECK(f.from_int(-1) == 6);
  }

  TEST_CASE("rref of the identity and of a rank one matrix") {
    PrimeField f3(3), f2(2);
    auto id = FpMatrix::identity(f3, 3);
    auto r = rref(id);
    CHECK(r.reduced == id);
    CHECK(r.rank == 3);
    auto ones = FpMatrix::from_rows(f2, {{1, 1}, {1, 1}});
    auto r2 = rref(ones);
    CHECK(r2.reduced == FpMatrix::from_rows(f2, {{1, 1}, {0, 0}}));
    CHECK(r2.rank == 1);
  }

  TEST_CASE("rank agrees with minor expansion on random matrices") {
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 3u, 5u})
      for (int trial = 0; trial < 40; ++trial) {
        auto m = testing_support::random_fp(PrimeField(p), 5, 5, rng);
        if (trial % 3 == 0)
          m = testing_support::random_fp(PrimeField(p), 5, 2, rng) * testing_support::random_fp(PrimeField(p), 2, 5, rng);
        if (trial % 4 == 0)
          for (std::size_t j = 0; j < 5; ++j) m.at(4, j) = m(0, j);
        CHECK(rank(m) == minor_rank(m));
      }
  }

  TEST_CASE("rref is idempotent and keeps residues canonical") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      auto m = testing_support::random_fp(PrimeField(5), 4, 6, rng);
      auto once = rref(m).reduced;
      CHECK(canonical(once));
      CHECK(rref(once).reduced == once);
    }
  }

  TEST_CASE("nullspace") {
    PrimeField f2(2);
    CHECK(nullspace(FpMatrix::identity(f2, 3)).rows() == 0);
    auto k = nullspace(FpMatrix::from_rows(f2, {{1, 1}, {1, 1}}));
    REQUIRE(k.rows() == 1);
    CHECK(k.row_vector(0) == FpVector{1, 1});
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 40; ++trial) {
      auto m = testing_support::random_fp(PrimeField(3), 3, 5, rng);
      auto ns = nullspace(m);
      CHECK(ns.rows() + rank(m) == 5);
      for (std::size_t i = 0; i < ns.rows(); ++i) {
        auto img = m.apply(ns.row(i));
        CHECK(std::all_of(img.begin(), img.end(), [](Residue x) { return x == 0; }));
      }
    }
  }

  TEST_CASE("inverse") {
    std::mt19937_64 rng(3);
    PrimeField f(7);
    auto m = testing_support::random_invertible(f, 4, rng);
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK((m * *inv).is_identity());
    CHECK_FALSE(inverse(FpMatrix::from_rows(f, {{1, 2}, {2, 4}})).has_value());
  }

  TEST_CASE("characteristic polynomial") {
    PrimeField f(3);
    CHECK(charpoly(FpMatrix(f, 2, 2)) == FpPoly::monomial(f, 1, 2));
    // companion matrix of x^3 + 2x + 1
    auto target = poly(3, {1, 2, 0, 1});
    auto comp = FpMatrix::from_rows(f, {{0, 0, 2}, {1, 0, 1}, {0, 1, 0}});
    CHECK(charpoly(comp) == target);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
      auto m = testing_support::random_fp(f, 4, 4, rng);
      CHECK(evaluate(charpoly(m), m).is_zero());
    }
    CHECK_THROWS_AS(charpoly(FpMatrix(f, 2, 3)), NonSquare);
  }

  TEST_CASE("polynomial factorisation") {
    auto f = factor_poly(poly(2, {1, 0, 0, 1}));
    REQUIRE(f.size() == 2);
    CHECK(f[0].factor == poly(2, {1, 1}));
    CHECK(f[0].exponent == 1);
    CHECK(f[1].factor == poly(2, {1, 1, 1}));
    auto sq = factor_poly(poly(3, {0, 0, 1}));
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].factor == poly(3, {0, 1}));
    CHECK(sq[0].exponent == 2);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      PrimeField fp(p);
      auto xp = FpPoly::monomial(fp, 1, p) - FpPoly::constant(fp, 1);
      auto fs = factor_poly(xp);
      REQUIRE(fs.size() == 1);
      CHECK(fs[0].factor == poly(p, {p - 1, 1}));
      CHECK(fs[0].exponent == static_cast<int>(p));
    }
    CHECK_THROWS_AS(factor_poly(FpPoly(PrimeField(2))), ZeroPolynomial);
  }

  TEST_CASE("factorisation round trip") {
    std::mt19937_64 rng(17);
    for (std::uint32_t p : {2u, 3u, 5u}) {
      PrimeField f(p);
      std::uniform_int_distribution<Residue> d(0, p - 1);
      for (int trial = 0; trial < 40; ++trial) {
        std::vector<Residue> c(7);
        for (auto& x : c) x = d(rng);
        c.back() = 1;
        FpPoly in(f, c);
        FpPoly prod = FpPoly::constant(f, 1);
        for (const auto& pf : factor_poly(in)) {
          CHECK(is_irreducible(pf.factor));
          for (int e = 0; e < pf.exponent; ++e) prod = prod * pf.factor;
        }
        CHECK(prod == in);
      }
    }
  }

  TEST_CASE("determinant agrees with Leibniz expansion") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
      std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
      std::vector<std::vector<long long>> ll(n, std::vector<long long>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ll[i][j] = rows[i][j] = d(rng);
      CHECK(determinant(IntMatrix::from_rows(rows)) == BigInt(oracle::det_leibniz(ll)));
    }
  }

  TEST_CASE("Smith normal form examples") {
    auto a = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 4}}));
    CHECK(a.invariants() == std::vector<BigInt>{2, 4});
    auto b = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}}));
    CHECK(b.diag == IntMatrix::from_rows({{1, 0}, {0, 6}}));
  }

  TEST_CASE("Smith normal form: divisor chain and unimodular transforms") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = 2 + static_cast<std::size_t>(trial % 3), c = 2 + static_cast<std::size_t>((trial / 3) % 4);
      std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(c));
      for (auto& row : rows)
        for (auto& x : row) x = d(rng);
      const auto m = IntMatrix::from_rows(rows);
      const auto s = smith_normal_form(m);
      CHECK(s.left * m * s.right == s.diag);
      CHECK(abs(determinant(s.left)) == 1);
      CHECK(abs(determinant(s.right)) == 1);
      CHECK(s.diag.is_diagonal());
      const auto inv = s.invariants();
      for (std::size_t i = 0; i + 1 < inv.size(); ++i) CHECK(inv[i + 1] % inv[i] == 0);
      // d1 is the gcd of the entries
      if (!inv.empty()) {
        BigInt g = 0;
        for (const auto& row : rows)
          for (auto x : row) g = boost::multiprecision::gcd(g, BigInt(x));
        CHECK(inv[0] == g);
      }
    }
  }

  TEST_CASE("integer left kernel") {
    auto k = left_kernel(IntMatrix::from_rows({{1, 2}, {2, 4}, {0, 1}}));
    REQUIRE(k.rows() == 1);
    CHECK((k * IntMatrix::from_rows({{1, 2}, {2, 4}, {0, 1}})).is_zero());
  }

  TEST_CASE("chain ring arithmetic") {
    auto z4 = parse_coeff_spec("Z/2^2");
    CHECK(z4.size() == 4);
    CHECK(z4.mul(2, 2) == 0);
    CHECK(z4.valuation(2) == 1);
    CHECK(z4.unit_inverse(3) == 3);
    auto tp = parse_coeff_spec("F3[t]/t^2");
    CHECK(tp.kind() == ChainKind::TruncPoly);
    CHECK(tp.mul(3, 3) == 0);               // t * t
    CHECK(tp.from_int(3) == 0);             // 3 = 0 in characteristic 3
    CHECK(tp.mul(tp.from_int(2), 4) == 8);  // 2 (1 + t) = 2 + 2t
    CHECK(parse_coeff_spec("F5").is_field());
    CHECK(parse_coeff_spec("Z/3").is_field());
    CHECK(parse_coeff_spec("F3[t]/t^2").to_string() == "F3[t]/t^2");
    CHECK_THROWS_AS(parse_coeff_spec("Z/6"), SpecSyntaxError);
    CHECK_THROWS_AS(parse_coeff_spec("F3xF5"), SpecSyntaxError);
    CHECK_THROWS_AS(parse_coeff_spec("Q"), SpecSyntaxError);
    CHECK_THROWS_AS(z4.unit_inverse(2), InvalidArgument);
  }

  TEST_CASE("Howell form examples over Z/4") {
    auto z4 = parse_coeff_spec("Z/2^2");
    auto two = ChainMatrix::from_codes(z4, {{2}});
    CHECK(howell_form(two) == two);
    auto m = ChainMatrix::from_codes(z4, {{1, 1}, {0, 2}});
    auto h = howell_form(m);
    CHECK(h.rows() == 2);
    const bool brute = exhaustive_span(m).count({1, 3}) > 0;
    CHECK(brute);
    CHECK(RowSpan(m).contains(ChainVector{1, 3}) == brute);
  }

  TEST_CASE("Howell form is canonical against exhaustive spans") {
    std::mt19937_64 rng(31);
    for (const char* spec : {"Z/2^2", "Z/3^2", "Z/2^3"}) {
      const auto r = parse_coeff_spec(spec);
      std::vector<ChainMatrix> samples;
      for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + static_cast<std::size_t>(trial % 3);
        const std::size_t cols = 1 + static_cast<std::size_t>((trial / 3) % (r.size() > 4 ? 3 : 4));
        auto m = random_chain(r, rows, cols, rng);
        if (trial % 2) {  // force zero divisors
          for (std::size_t j = 0; j < cols; ++j) m.at(0, j) = r.mul(m(0, j), r.p());
        }
        samples.push_back(m);
      }
      for (std::size_t a = 0; a < samples.size(); ++a) {
        const auto& m = samples[a];
        const auto h = howell_form(m);
        for (std::size_t i = 0; i < h.rows(); ++i)
          for (std::size_t j = 0; j < h.cols(); ++j) CHECK(h(i, j) < r.size());
        const auto span = exhaustive_span(m);
        CHECK(exhaustive_span(h) == span);
        std::size_t size = 1;
        for (std::size_t k = 0; k < RowSpan(m).length(); ++k) size *= r.p();
        CHECK(span.size() == size);
        // a reshuffled generating set has an identical form
        ChainMatrix shuffled(r, m.rows() + 1, m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j) shuffled.at(m.rows() - 1 - i, j) = m(i, j);
        for (std::size_t j = 0; j < m.cols(); ++j) shuffled.at(m.rows(), j) = r.add(m(0, j), r.mul(3, m(m.rows() - 1, j)));
        CHECK(howell_form(shuffled) == h);
        for (std::size_t b = 0; b < a; ++b) {
          if (samples[b].cols() != m.cols()) continue;
          CHECK((exhaustive_span(samples[b]) == span) == (howell_form(samples[b]) == h));
        }
        // membership against the exhaustive set
        std::uniform_int_distribution<std::uint64_t> d(0, r.size() - 1);
        for (int probe = 0; probe < 5; ++probe) {
          ChainVector v(m.cols());
          for (auto& x : v) x = d(rng);
          CHECK(RowSpan(m).contains(v) == (span.count(v) > 0));
        }
      }
    }
  }

  TEST_CASE("chain matrix inverse and left kernel") {
    auto z9 = parse_coeff_spec("Z/3^2");
    auto m = ChainMatrix::from_codes(z9, {{1, 3}, {2, 4}});
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(m * *inv == ChainMatrix::identity(z9, 2));
    CHECK_FALSE(inverse(ChainMatrix::from_codes(z9, {{3, 0}, {0, 1}})).has_value());
    auto k = left_kernel(ChainMatrix::from_codes(z9, {{3}, {1}}));
    for (std::size_t i = 0; i < k.form().rows(); ++i) {
      auto row = k.form().row_vector(i);
      CHECK(z9.add(z9.mul(row[0], 3), row[1]) == 0);
    }
    CHECK(k.length() == 2);
  }
}
