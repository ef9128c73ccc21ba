#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "qcover/coset_enumeration.hpp"
#include "qcover/errors.hpp"
#include "qcover/perm_group.hpp"

using namespace qcover;

namespace {

struct Known {
  const char* relators;
  std::size_t order;
};

const Known kKnown[] = {
    {"x, y", 1},
    {"x5, y", 5},
    {"x2, y3, (xy)2", 6},
    {"x2, y2, (xy)4", 8},
    {"x4, y4, xxYY, Yxyx", 8},
    {"x2, y2, (xy)6", 12},
    {"x2, y3, (xy)3", 12},
    {"x4, y4, Yxyx", 16},
    {"x2, y3, (xy)4", 24},
    {"x2, y3, (xy)5", 60},
    {"x12, y2, (YX)12, (xy)x3(YX)X9, X(YX)3x(xy)9, (YX)6X6", 96},
};

RegularRepresentation rep(const char* text) { return regular_representation(parse_presentation(text)); }

// Number of generating pairs of the group on which every relator vanishes,
// from raw element lists.
std::size_t brute_epimorphisms(const std::set<oracle::Perm>& g, const Presentation& p, std::size_t n) {
  std::size_t count = 0;
  for (const auto& a : g)
    for (const auto& b : g) {
      if (oracle::closure({a, b}, n).size() != g.size()) continue;
      const Permutation imgs[2] = {Permutation(a), Permutation(b)};
      bool ok = true;
      for (const auto& r : p.relators())
        if (!evaluate_word(r, imgs, n).is_identity()) ok = false;
      count += ok;
    }
  return count;
}

}  // namespace

TEST_CASE("words: parsing, reduction and formatting") {
  const Word w = parse_word("xY(xy)2X3");
  CHECK(format_word(w) == "xYxyxyX3");
  CHECK(parse_word("xX").reduced().empty());
  CHECK(format_word(parse_word("xX").reduced()) == "1");
  CHECK(parse_word("(xy)-1") == parse_word("YX"));
  CHECK(parse_word("x0").empty());
  CHECK(w.exponent_sums(2) == std::vector<Int>{0, 1});
  CHECK(w * w.inverse() != Word{});
  CHECK((w * w.inverse()).reduced().empty());
  CHECK(parse_word("xy").pow(-2) == parse_word("YXYX"));
  CHECK(commutator(parse_word("x"), parse_word("y")) == parse_word("XYxy"));
  CHECK(conjugate(parse_word("x"), parse_word("y")) == parse_word("Yxy"));
  CHECK(substitute(parse_word("xY"), {parse_word("y"), parse_word("xx")}) == parse_word("yXX"));
  CHECK_THROWS_AS(parse_word("xz"), InvalidArgument);
  CHECK_THROWS_AS(parse_word("(xy"), InvalidArgument);
  const Presentation p = parse_presentation("x2, y3, (xy)5");
  CHECK(p.relators().size() == 3);
  CHECK(parse_presentation(format_presentation(p)).relators() == p.relators());
}

TEST_CASE("permutations compose left to right") {
  const Permutation a(std::vector<Point>{1, 2, 0});
  const Permutation b(std::vector<Point>{1, 0, 2});
  CHECK((a * b).images() == std::vector<Point>{0, 2, 1});
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.order() == 3);
  CHECK(a.pow(-1) == a.inverse());
  CHECK(a.cycles().size() == 1);
  CHECK(conjugate(a, b) == b.inverse() * a * b);
  CHECK(commutator(a, b) == a.inverse() * b.inverse() * a * b);
  const Permutation gens[2] = {a, b};
  CHECK(evaluate_word(parse_word("xYx"), gens, 3) == a * b.inverse() * a);
  CHECK(trace_word(0, parse_word("xYx"), gens) == (a * b.inverse() * a)[0]);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), InvalidArgument);
}

TEST_CASE("coset enumeration reproduces known orders") {
  for (const auto& k : kKnown) {
    CAPTURE(std::string(k.relators));
    const Presentation p = parse_presentation(k.relators);
    const CosetTable t = todd_coxeter(p, {});
    REQUIRE(t.num_cosets() == k.order);
    // The action on cosets of the trivial subgroup is regular: its closure
    // has exactly as many elements as points, and every relator acts trivially.
    const auto gens = oracle::images_of(t.generator_permutations());
    CHECK(oracle::closure(gens, k.order).size() == k.order);
    for (const auto& r : p.relators())
      CHECK(evaluate_word(r, t.generator_permutations(), k.order).is_identity());
  }
}

TEST_CASE("coset enumeration over a subgroup gives its index") {
  const Presentation s3 = parse_presentation("x2, y3, (xy)2");
  const Word x[1] = {parse_word("x")};
  CHECK(todd_coxeter(s3, x).num_cosets() == 3);
  const Word y[1] = {parse_word("y")};
  CHECK(todd_coxeter(parse_presentation("x2, y3, (xy)5"), y).num_cosets() == 20);
}

TEST_CASE("infinite or oversized groups exhaust the coset budget") {
  CHECK_THROWS_AS(todd_coxeter(parse_presentation("x3, y3, (xy)3"), {}, 2000), ResourceError);
  CHECK_THROWS_AS(todd_coxeter(parse_presentation("x2, y3, (xy)5"), {}, 30), ResourceError);
}

TEST_CASE("group closure matches the brute-force closure") {
  for (const auto& k : kKnown) {
    CAPTURE(std::string(k.relators));
    const RegularRepresentation r = rep(k.relators);
    CHECK(r.group.order() == k.order);
    CHECK(r.group.is_regular());
    CHECK(r.group.element(0).is_identity());
    const auto brute = oracle::closure(oracle::images_of(r.generators), k.order);
    std::set<oracle::Perm> ours;
    for (const auto& e : r.group.elements()) ours.insert(e.images());
    CHECK(ours == brute);
    CHECK(regular_subgroup_order(r.generators) == k.order);
  }
  CHECK_THROWS_AS(PermGroup(rep("x2, y3, (xy)5").group.degree(), rep("x2, y3, (xy)5").generators, 10),
                  ResourceError);
}

TEST_CASE("lower central series against the element-set oracle") {
  struct Case {
    const char* relators;
    std::optional<int> klass;
  };
  const Case cases[] = {{"x5, y", 1},          {"x4, y4, xxYY, Yxyx", 2}, {"x2, y2, (xy)4", 2},
                        {"x2, y2, (xy)8", 3},   {"x4, y4, Yxyx", 2},       {"x2, y3, (xy)2", std::nullopt},
                        {"x2, y3, (xy)3", std::nullopt}};
  for (const auto& c : cases) {
    CAPTURE(std::string(c.relators));
    const RegularRepresentation r = rep(c.relators);
    const LowerCentralSeries lcs = lower_central_series(r.group);
    CHECK(lcs.nilpotency_class == c.klass);
    std::set<oracle::Perm> g;
    for (const auto& e : r.group.elements()) g.insert(e.images());
    const int brute = oracle::nilpotency_class(g, r.group.degree());
    CHECK(brute == (c.klass ? *c.klass : -1));
  }
}

TEST_CASE("derived subgroups, normal closures and quotients") {
  const RegularRepresentation s4 = rep("x2, y3, (xy)4");
  CHECK(derived_subgroup(s4.group).order() == 12);
  CHECK(derived_subgroup(derived_subgroup(s4.group)).order() == 4);

  // Normal closure of a transposition-like involution in S4 is all of S4;
  // of a double transposition, the Klein four-group.
  const Permutation x = s4.generators[0];
  const Permutation seed[1] = {x};
  CHECK(normal_closure(s4.group, seed).order() == 24);
  const Permutation vseed[1] = {(s4.generators[0] * s4.generators[1]).pow(2)};
  const PermGroup v = normal_closure(s4.group, vseed);
  CHECK(v.order() == 4);
  CHECK(is_normal_in(v, s4.group));
  CHECK_FALSE(is_normal_in(subgroup_generated(24, seed), s4.group));

  // Brute-force normal closure: conjugates of the seed, closed.
  std::vector<oracle::Perm> conj;
  for (const auto& g : s4.group.elements()) conj.push_back(conjugate(vseed[0], g).images());
  CHECK(oracle::closure(conj, 24).size() == v.order());

  const auto q = quotient_action(s4.group, v);
  CHECK(regular_subgroup_order(q) == 6);

  const RegularRepresentation q8 = rep("x4, y4, xxYY, Yxyx");
  const Permutation z[1] = {q8.generators[0].pow(2)};
  const PermGroup centre = subgroup_generated(8, z);
  const auto blocks = quotient_action(q8.group, centre);
  CHECK(regular_subgroup_order(blocks) == 4);
  CHECK(commutator_subgroup(q8.group, q8.group).order() == 2);
}

TEST_CASE("automorphism counts agree with brute-force epimorphism counts") {
  struct Case {
    const char* relators;
    std::size_t aut;
  };
  const Case cases[] = {{"x2, y3, (xy)2", 6}, {"x4, y4, xxYY, Yxyx", 24}, {"x2, y3, (xy)3", 24}, {"x4, y4, Yxyx", 32}};
  for (const auto& c : cases) {
    CAPTURE(std::string(c.relators));
    const Presentation p = parse_presentation(c.relators);
    const RegularRepresentation r = regular_representation(p);
    CHECK(automorphism_count(r.group, p) == c.aut);
    std::set<oracle::Perm> g;
    for (const auto& e : r.group.elements()) g.insert(e.images());
    CHECK(brute_epimorphisms(g, p, r.group.degree()) == c.aut);
  }
}

TEST_CASE("morphism classification and isomorphism search") {
  const RegularRepresentation q8 = rep("x4, y4, xxYY, Yxyx");
  const RegularRepresentation d8 = rep("x2, y2, (xy)4");
  const Presentation q8p = parse_presentation("x4, y4, xxYY, Yxyx");
  CHECK(find_isomorphism(q8p, q8.group).has_value());
  CHECK_FALSE(find_isomorphism(q8p, d8.group).has_value());

  const Permutation same[2] = {q8.generators[0], q8.generators[1]};
  CHECK(extends_to_morphism(q8p, same, q8.group).kind == MorphismKind::automorphism);
  const Permutation sub[2] = {q8.generators[0].pow(2), q8.generators[0].pow(2)};
  CHECK(extends_to_morphism(q8p, sub, q8.group).kind == MorphismKind::hom_onto_subgroup);
  const Permutation bad[2] = {q8.generators[0], q8.group.identity()};
  CHECK(extends_to_morphism(q8p, bad, q8.group).kind == MorphismKind::not_hom);

  // Q8 onto its quotient by the centre.
  const Permutation z[1] = {q8.generators[0].pow(2)};
  const auto blocks = quotient_action(q8.group, subgroup_generated(8, z));
  const PermGroup v4(blocks[0].degree(), blocks);
  CHECK(extends_to_morphism(q8p, blocks, v4).kind == MorphismKind::epimorphism);

  CHECK(generating_pairs(q8.group).size() == 24);
  CHECK(std::string(to_string(MorphismKind::epimorphism)) == "epimorphism");
}
