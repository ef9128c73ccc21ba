#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <limits>
#include <random>

#include "oracles.hpp"
#include "qcover/errors.hpp"
#include "qcover/intlattice.hpp"

using namespace qcover;

namespace {

std::vector<std::vector<Int>> rows_of(const IntMatrix& m) {
  std::vector<std::vector<Int>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

// Z_n1 x Z_n2 modulo the subgroup generated by `extra`, by listing the subgroup.
struct BruteQuotient {
  Int n1, n2;
  std::set<std::pair<Int, Int>> sub;

  BruteQuotient(Int a, Int b, const std::vector<std::pair<Int, Int>>& extra) : n1(a), n2(b) {
    std::vector<std::pair<Int, Int>> frontier{{0, 0}};
    sub.insert({0, 0});
    while (!frontier.empty()) {
      std::vector<std::pair<Int, Int>> next;
      for (auto [x, y] : frontier)
        for (auto [ex, ey] : extra) {
          std::pair<Int, Int> p{oracle::md(x + ex, n1), oracle::md(y + ey, n2)};
          if (sub.insert(p).second) next.push_back(p);
        }
      frontier = std::move(next);
    }
  }
  Int order() const { return n1 * n2 / static_cast<Int>(sub.size()); }
  Int element_order(Int x, Int y) const {
    for (Int k = 1;; ++k)
      if (sub.contains({oracle::md(k * x, n1), oracle::md(k * y, n2)})) return k;
  }
};

}  // namespace

TEST_CASE("checked arithmetic throws on overflow") {
  const Int big = std::numeric_limits<Int>::max();
  CHECK_THROWS_AS(checked::add(big, 1), OverflowError);
  CHECK_THROWS_AS(checked::mul(big / 2 + 1, 2), OverflowError);
  CHECK_THROWS_AS(checked::neg(std::numeric_limits<Int>::min()), OverflowError);
  CHECK(checked::sub(-5, 7) == -12);
}

TEST_CASE("modular helpers") {
  CHECK(mod(-1, 5) == 4);
  CHECK(mod(7, 1) == 0);
  CHECK(gcd(-12, 18) == 6);
  CHECK(gcd(0, 0) == 0);
  CHECK(lcm(4, 6) == 12);
  CHECK(is_unit(0, 1));
  CHECK_FALSE(is_unit(2, 4));
  CHECK(congruent(-1, 7, 8));
  CHECK_THROWS_AS(mod(3, 0), InvalidArgument);
}

TEST_CASE("smith normal form on fixed matrices") {
  const SnfResult a = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  CHECK(a.diagonal() == std::vector<Int>{2, 6, 12});
  const SnfResult b = smith_normal_form(IntMatrix{{4, 0}, {0, 6}});
  CHECK(b.diagonal() == std::vector<Int>{2, 12});
  const SnfResult z = smith_normal_form(IntMatrix{{0, 0}, {0, 0}});
  CHECK(z.rank() == 0);
}

TEST_CASE("smith normal form identities on 1000 random matrices") {
  std::mt19937_64 rng(20261019);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<Int> entry(-9, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    IntMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = entry(rng);
    const SnfResult s = smith_normal_form(a);
    CAPTURE(a.to_string());
    REQUIRE(s.U * a * s.V == s.S);
    CHECK(std::abs(s.U.determinant()) == 1);
    CHECK(std::abs(s.V.determinant()) == 1);
    CHECK(s.S.is_diagonal());
    const auto d = s.diagonal();
    for (std::size_t k = 0; k < d.size(); ++k) {
      CHECK(d[k] >= 0);
      if (k + 1 < d.size() && d[k] != 0) CHECK(d[k + 1] % d[k] == 0);
      if (d[k] == 0 && k + 1 < d.size()) CHECK(d[k + 1] == 0);
    }
    auto nonzero = d;
    std::erase(nonzero, 0);
    CHECK(nonzero == oracle::invariant_factors_by_minors(rows_of(a)));
    // Deterministic: the same input gives the same decomposition.
    const SnfResult again = smith_normal_form(a);
    CHECK(again.U == s.U);
    CHECK(again.V == s.V);
  }
}

TEST_CASE("finite abelian groups agree with brute-force quotients") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> modulus(1, 12), entry(-20, 20);
  for (int trial = 0; trial < 300; ++trial) {
    const Int n1 = modulus(rng), n2 = modulus(rng);
    std::vector<std::vector<Int>> rel{{n1, 0}, {0, n2}};
    std::vector<std::pair<Int, Int>> extra;
    const int k = static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) {
      const Int a = entry(rng), b = entry(rng);
      rel.push_back({a, b});
      extra.push_back({a, b});
    }
    const FinAbGroup g = abgroup_from_relations(2, rel);
    const BruteQuotient q(n1, n2, extra);
    CAPTURE(n1);
    CAPTURE(n2);
    REQUIRE(g.order() == q.order());
    Int exponent = 1;
    for (Int x = 0; x < n1; ++x)
      for (Int y = 0; y < n2; ++y) {
        const Int e[2] = {x, y};
        const Int o = element_order(g, g.from_exponents(e));
        CHECK(o == q.element_order(x, y));
        exponent = std::max(exponent, o);
      }
    std::vector<Int> expected;
    if (q.order() / exponent > 1) expected.push_back(q.order() / exponent);
    if (exponent > 1) expected.push_back(exponent);
    CHECK(g.invariant_factors() == expected);
    CHECK(g.is_cyclic() == (exponent == q.order()));
  }
}

TEST_CASE("group element arithmetic") {
  const FinAbGroup g = abgroup_from_relations(2, {{4, 0}, {0, 6}});
  CHECK(g.invariant_factors() == std::vector<Int>{2, 12});
  const AbElement x = g.generator(0);
  CHECK(g.is_identity(g.scale(x, 4)));
  CHECK_FALSE(g.is_identity(g.scale(x, 2)));
  CHECK(g.add(x, g.scale(x, -1)) == g.identity());
  CHECK(element_order(g, g.add(g.generator(0), g.generator(1))) == 12);
}

TEST_CASE("infinite quotients are rejected") {
  CHECK_THROWS_AS(abgroup_from_relations(2, {{2, 0}}), InvalidArgument);
  CHECK_THROWS_AS(IntMatrix::from_rows({{1, 2}, {3}}, 2), InvalidArgument);
}
