#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "qcover/errors.hpp"
#include "qcover/hypermap.hpp"

using namespace qcover;

namespace {

AlgebraicHypermap from(const char* text) { return hypermap_from_presentation(parse_presentation(text)); }

// Brins shared by each x-cycle and y-cycle, counted point by point.
std::vector<std::vector<Int>> brute_adjacency(const AlgebraicHypermap& h) {
  const auto xc = h.x().cycles(), yc = h.y().cycles();
  std::vector<std::vector<Int>> adj(xc.size(), std::vector<Int>(yc.size(), 0));
  for (std::size_t i = 0; i < xc.size(); ++i)
    for (std::size_t j = 0; j < yc.size(); ++j)
      for (Point p : xc[i])
        for (Point q : yc[j]) adj[i][j] += p == q;
  return adj;
}

std::vector<std::vector<Int>> shuffled(std::vector<std::vector<Int>> a, unsigned seed) {
  std::mt19937 rng(seed);
  std::shuffle(a.begin(), a.end(), rng);
  std::vector<std::size_t> cols(a[0].size());
  std::iota(cols.begin(), cols.end(), 0);
  std::shuffle(cols.begin(), cols.end(), rng);
  for (auto& row : a) {
    std::vector<Int> r(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) r[j] = row[cols[j]];
    row = r;
  }
  return a;
}

std::vector<std::vector<Int>> transposed(const std::vector<std::vector<Int>>& a) {
  std::vector<std::vector<Int>> t(a[0].size(), std::vector<Int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

}  // namespace

TEST_CASE("type and genus agree with the Euler characteristic") {
  struct Case {
    const char* relators;
    HypermapType type;
    Int genus;
  };
  const Case cases[] = {
      {"x4, y4, xxYY, Yxyx", {4, 4, 4}, 2},
      {"x3, y2, (xy)3", {3, 2, 3}, 0},
      {"x4, y2, (xy)3", {4, 2, 3}, 0},
      {"x2, y3, (xy)5", {2, 3, 5}, 0},
      {"x4, y4, Yxyx", {4, 4, 4}, 3},
      {"x12, y2, (YX)12, (xy)x3(YX)X9, X(YX)3x(xy)9, (YX)6X6", {12, 2, 12}, 17},
  };
  for (const auto& c : cases) {
    CAPTURE(std::string(c.relators));
    const AlgebraicHypermap h = from(c.relators);
    CHECK(type_of(h) == c.type);
    CHECK(genus_of(h) == c.genus);
    CHECK(oracle::genus_by_euler(h.x().images(), h.y().images()) == c.genus);
  }
}

TEST_CASE("genus formula rejects impossible types") {
  CHECK(genus_from_type(8, {4, 4, 4}) == 2);
  CHECK_THROWS_AS(genus_from_type(10, {4, 4, 4}), InvariantViolation);
  const AlgebraicHypermap t = trivial_hypermap();
  CHECK(t.order() == 1);
  CHECK(type_of(t) == HypermapType{1, 1, 1});
  CHECK(genus_of(t) == 0);
}

TEST_CASE("non-regular generator pairs are rejected") {
  const Permutation a(std::vector<Point>{1, 0, 2});
  const Permutation b(std::vector<Point>{0, 2, 1});
  CHECK_THROWS_AS(AlgebraicHypermap(a, b, parse_presentation("x2, y2, (xy)3")), InvalidArgument);
}

TEST_CASE("coverings and branching") {
  const AlgebraicHypermap r96 = from("x12, y2, (YX)12, (xy)x3(YX)X9, X(YX)3x(xy)9, (YX)6X6");
  const AlgebraicHypermap tetra = from("x3, y2, (xy)3");
  const CoveringReport c = covering_report(r96, tetra);
  CHECK(c.covering);
  CHECK(c.kernel_order == 8);
  CHECK_FALSE(c.smooth_v);
  CHECK(c.smooth_e);
  CHECK_FALSE(c.smooth_f);

  const AlgebraicHypermap q8 = from("x4, y4, xxYY, Yxyx");
  CHECK(covering_report(q8, trivial_hypermap()).covering);
  CHECK_FALSE(covering_report(tetra, q8).covering);
  CHECK(hypermaps_isomorphic(q8, q8));
  CHECK_FALSE(hypermaps_isomorphic(q8, from("x4, y4, Yxyx")));
}

TEST_CASE("Walsh fingerprints agree with direct cycle intersection counts") {
  for (const char* text : {"x4, y4, xxYY, Yxyx", "x3, y2, (xy)3", "x4, y4, Yxyx", "x4, y2, (xy)3"}) {
    CAPTURE(std::string(text));
    const AlgebraicHypermap h = from(text);
    const WalshFingerprint f = walsh_fingerprint(h);
    const WalshFingerprint brute = fingerprint_from_adjacency(brute_adjacency(h));
    CHECK(f.summary() == brute.summary());
    CHECK(bipartite_isomorphic(f, brute) == GraphIsoResult::isomorphic);
  }
  const WalshFingerprint q8 = walsh_fingerprint(from("x4, y4, xxYY, Yxyx"));
  CHECK(q8.summary() == std::vector<Int>{2, 2, 4, 4, 4, 2});
  CHECK(bipartite_isomorphic(q8, cycle_graph(2, 2)) == GraphIsoResult::isomorphic);
}

TEST_CASE("reference graphs") {
  CHECK(cycle_graph(4, 2).summary() == std::vector<Int>{4, 4, 4, 4, 8, 2});
  CHECK(complete_bipartite(4, 4).summary() == std::vector<Int>{4, 4, 4, 4, 16, 1});
  CHECK(hypercube_graph(4).summary() == std::vector<Int>{8, 8, 4, 4, 32, 1});
  CHECK(hypercube_graph(1).summary() == std::vector<Int>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("bipartite isomorphism by backtracking") {
  const auto cube = hypercube_graph(4).adjacency;
  for (unsigned seed = 0; seed < 5; ++seed) {
    CHECK(bipartite_isomorphic(hypercube_graph(4), fingerprint_from_adjacency(shuffled(cube, seed))) ==
          GraphIsoResult::isomorphic);
    CHECK(bipartite_isomorphic(hypercube_graph(4), fingerprint_from_adjacency(transposed(shuffled(cube, seed)))) ==
          GraphIsoResult::isomorphic);
  }
  // Two disjoint copies of K_{4,4} share every summary number with the
  // 4-cube but are disconnected.
  std::vector<std::vector<Int>> two(8, std::vector<Int>(8, 0));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) two[i][j] = (i < 4) == (j < 4);
  const WalshFingerprint split = fingerprint_from_adjacency(two);
  CHECK(split.summary() == hypercube_graph(4).summary());
  CHECK(bipartite_isomorphic(hypercube_graph(4), split) == GraphIsoResult::not_isomorphic);
  CHECK(bipartite_isomorphic(cycle_graph(4, 2), complete_bipartite(4, 4)) == GraphIsoResult::not_isomorphic);
  CHECK(bipartite_isomorphic(cycle_graph(20, 1), cycle_graph(20, 1)) == GraphIsoResult::unverified_fingerprint_match);
  CHECK(std::string(to_string(GraphIsoResult::not_isomorphic)) == "not_isomorphic");
}
