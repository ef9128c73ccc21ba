#include <map>

#include "qcover/cli.hpp"
#include "qcover/errors.hpp"

namespace qcover::cli {

namespace {

// Relabels the points of a regular pair by breadth-first search from point 0,
// so two pairs define isomorphic hypermaps exactly when the results agree.
std::pair<Permutation, Permutation> canonical_pair(const Permutation& a, const Permutation& b) {
  const std::size_t n = a.degree();
  std::vector<Point> label(n, static_cast<Point>(n));
  std::vector<Point> order{0};
  label[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const Permutation* g : {&a, &b}) {
      const Point q = (*g)[order[i]];
      if (label[q] == static_cast<Point>(n)) {
        label[q] = static_cast<Point>(order.size());
        order.push_back(q);
      }
    }
  std::vector<Point> ca(n), cb(n);
  for (std::size_t p = 0; p < n; ++p) {
    ca[label[p]] = label[a[p]];
    cb[label[p]] = label[b[p]];
  }
  return {Permutation(std::move(ca)), Permutation(std::move(cb))};
}

std::string sizes(const PermGroup& g) { return "order " + std::to_string(g.order()); }

const char* const kQuaternion = "(xy)4, xYxy, yXyx";

void quaternion_checks(std::vector<CheckItem>& out, std::size_t max_cosets) {
  const AlgebraicHypermap h = hypermap_from_presentation(parse_presentation(kQuaternion), max_cosets);
  const HypermapType t = type_of(h);
  out.push_back({"Q8.structure", status_of(h.order() == 8 && t == HypermapType{4, 4, 4} && genus_of(h) == 2),
                 "order " + std::to_string(h.order()) + ", type " + t.to_string() + ", genus " +
                     std::to_string(genus_of(h))});
  std::string failed;
  for (const auto& op : builtin_operations())
    if (!is_invariant(h, op)) failed += (failed.empty() ? "" : ",") + op.name;
  out.push_back({"Q8.invariant", status_of(failed.empty()),
                 failed.empty() ? "invariant under all " + std::to_string(builtin_operations().size()) + " operations"
                                : "not invariant under " + failed});
  const WalshFingerprint f = walsh_fingerprint(h);
  const GraphIsoResult iso = bipartite_isomorphic(f, cycle_graph(2, 2));
  out.push_back({"Q8.walsh", status_of(iso == GraphIsoResult::isomorphic),
                 std::string("doubled 4-cycle: ") + to_string(iso)});
}

void order16_checks(std::vector<CheckItem>& out, std::size_t max_cosets) {
  const Presentation p = parse_presentation("x4, y4, Yxyx");
  const AlgebraicHypermap h1 = hypermap_from_presentation(p, max_cosets);
  const PermGroup& g = h1.group();
  const auto pairs = generating_pairs(g);
  const std::size_t aut = automorphism_count(g, p);

  std::map<std::pair<std::vector<Point>, std::vector<Point>>, std::size_t> classes;
  for (const auto& [i, j] : pairs) {
    const auto c = canonical_pair(g.element(i), g.element(j));
    ++classes[{c.first.images(), c.second.images()}];
  }
  out.push_back({"M16.pairs",
                 status_of(g.order() == 16 && pairs.size() == 96 && aut == 32 && classes.size() == 3),
                 sizes(g) + ", " + std::to_string(pairs.size()) + " generating pairs, |Aut| = " + std::to_string(aut) +
                     ", " + std::to_string(classes.size()) + " hypermap classes"});

  const AlgebraicHypermap h2 = apply_operation(h1, builtin_operation("tau"));
  const GenSubstitution third{"s3", parse_word("y"), parse_word("xy"), parse_word("yX"), parse_word("x")};
  const AlgebraicHypermap h3 = apply_operation(h1, third);
  const AlgebraicHypermap* hs[3] = {&h1, &h2, &h3};
  bool distinct = true;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (hypermaps_isomorphic(*hs[a], *hs[b])) distinct = false;
  out.push_back({"M16.distinct", status_of(distinct), "H1, H2, H3 pairwise non-isomorphic"});

  const GenSubstitution& tau = builtin_operation("tau");
  const bool swaps = hypermaps_isomorphic(apply_operation(h1, tau), h2) &&
                     hypermaps_isomorphic(apply_operation(h2, tau), h1) &&
                     hypermaps_isomorphic(apply_operation(h3, tau), h3);
  out.push_back({"M16.tau", status_of(swaps), "tau swaps H1 and H2 and fixes H3"});

  // Stated: all three have underlying graph K4,4. H3 = (G, y, xy) has
  // <y> and <xy> meeting in <y^2>, so its edges are doubled.
  auto is = [](const AlgebraicHypermap& h, const WalshFingerprint& ref) {
    return bipartite_isomorphic(walsh_fingerprint(h), ref) == GraphIsoResult::isomorphic;
  };
  const WalshFingerprint k44 = complete_bipartite(4, 4);
  const bool all_k44 = is(h1, k44) && is(h2, k44) && is(h3, k44);
  const bool h3_doubled = is(h1, k44) && is(h2, k44) && is(h3, cycle_graph(4, 2));
  out.push_back({"M16.walsh",
                 all_k44 ? CheckStatus::pass : (h3_doubled ? CheckStatus::flagged_discrepancy : CheckStatus::fail),
                 all_k44 ? "H1, H2, H3 have underlying graph K4,4"
                         : std::string("H1, H2 have underlying graph K4,4; H3 has ") +
                               (h3_doubled ? "the doubled 8-cycle, not K4,4" : "neither K4,4 nor the doubled 8-cycle")});

  bool fixed = true;
  for (const char* name : {"pi", "iota"})
    for (const auto* h : hs)
      if (!is_invariant(*h, builtin_operation(name))) fixed = false;
  out.push_back({"M16.pi_iota", status_of(fixed), "pi and iota fix H1, H2, H3"});
}

void order32_checks(std::vector<CheckItem>& out, std::size_t max_cosets) {
  const AlgebraicHypermap h =
      hypermap_from_presentation(parse_presentation("x4, y4, (xy)4, XYYxyy, YXXyxx"), max_cosets);
  const PermGroup& g = h.group();
  const Permutation gens[2] = {h.x(), h.y()};
  const Permutation u = evaluate_word(word_u(), gens, g.degree());
  const Permutation v = evaluate_word(word_v(), gens, g.degree());
  const Permutation seeds[2] = {u, v};
  const PermGroup k = normal_closure(g, seeds);
  const bool klein = k.order() == 4 && k.is_abelian() && u.order() == 2 && v.order() == 2 && u != v;
  const NilpotencyAudit audit = nilpotency_audit(g, {u, v});
  const auto blocks = quotient_action(g, k);
  const AlgebraicHypermap quotient(blocks[0], blocks[1], parse_presentation(kQuaternion));
  const AlgebraicHypermap q8 = hypermap_from_presentation(parse_presentation(kQuaternion), max_cosets);
  const CoveringReport cov = covering_report(h, q8);
  const HypermapType t = type_of(h);
  const Covering census = build_covering(CoveringOctuple::make(2, 2, 1, 1, 1, 1, 1, 0), max_cosets);
  out.push_back({"C32.kernel", status_of(g.order() == 32 && klein), sizes(g) + ", K " + sizes(k)});
  out.push_back({"C32.census", status_of(hypermaps_isomorphic(h, census.hypermap)),
                 "isomorphic to the covering " + census.octuple.to_string()});
  out.push_back({"C32.nilpotency", status_of(audit.within_bound && audit.nilpotency_class == 1), audit.detail});
  out.push_back({"C32.quotient", status_of(quotient.order() == 8 && hypermaps_isomorphic(q8, quotient)),
                 "G/K " + std::to_string(quotient.order())});
  out.push_back({"C32.type", status_of(t == HypermapType{4, 4, 4} && genus_of(h) == 5),
                 "type " + t.to_string() + ", genus " + std::to_string(genus_of(h))});
  out.push_back({"C32.smooth", status_of(cov.covering && cov.smooth_v && cov.smooth_e && cov.smooth_f),
                 "covers the quaternion hypermap, kernel order " + std::to_string(cov.kernel_order)});
}

void order96_checks(std::vector<CheckItem>& out, std::size_t max_cosets) {
  const Presentation p = parse_presentation("x12, y2, (YX)12, (xy)x3(YX)X9, X(YX)3x(xy)9, (YX)6X6");
  const AlgebraicHypermap h = hypermap_from_presentation(p, max_cosets);
  const PermGroup& g = h.group();
  const Permutation a = h.x().pow(3);
  const Permutation b = (h.y().inverse() * h.x().inverse()).pow(3);
  const Permutation seeds[2] = {a, b};
  const PermGroup k = normal_closure(g, seeds);
  const bool k_q8 = k.order() == 8 && find_isomorphism(parse_presentation(kQuaternion), k, max_cosets);
  const NilpotencyAudit audit = nilpotency_audit(g, {a, b});

  const auto blocks = quotient_action(g, k);
  const Presentation alt4 = parse_presentation("x3, y2, (xy)3");
  const AlgebraicHypermap quotient(blocks[0], blocks[1], alt4);
  const AlgebraicHypermap tetra = hypermap_from_presentation(alt4, max_cosets);
  const CoveringReport cov = covering_report(h, tetra);
  const HypermapType t = type_of(h);

  out.push_back({"C96.kernel", status_of(g.order() == 96 && k_q8), sizes(g) + ", K " + sizes(k) + " isomorphic to Q8"});
  out.push_back({"C96.nilpotency", status_of(audit.within_bound && audit.nilpotency_class == 2), audit.detail});
  out.push_back({"C96.quotient", status_of(quotient.order() == 12 && hypermaps_isomorphic(tetra, quotient)),
                 "G/K order " + std::to_string(quotient.order()) + ", Alt(4)"});
  out.push_back({"C96.type", status_of(t == HypermapType{12, 2, 12} && genus_of(h) == 17),
                 "type " + t.to_string() + ", genus " + std::to_string(genus_of(h))});
  out.push_back({"C96.branching",
                 status_of(cov.covering && !cov.smooth_v && cov.smooth_e && !cov.smooth_f && cov.kernel_order == 8),
                 "covers the tetrahedral hypermap, smooth on edges only"});
}

}  // namespace

std::vector<CheckItem> smoke_checks(std::size_t max_cosets) {
  std::vector<CheckItem> out;
  quaternion_checks(out, max_cosets);
  order16_checks(out, max_cosets);
  order32_checks(out, max_cosets);
  order96_checks(out, max_cosets);
  return out;
}

}  // namespace qcover::cli
