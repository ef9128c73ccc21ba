#include "qcover/census.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "qcover/errors.hpp"

namespace qcover {

namespace {

// Representative of a mod n in (-n/2, n/2].
Int symmetric_residue(Int a, Int n) {
  const Int r = mod(a, n);
  return r > n / 2 ? r - n : r;
}

bool divides(Int m, Int a) { return mod(a, m) == 0; }

}  // namespace

CoveringOctuple CoveringOctuple::make(Int m, Int n, Int d, Int alpha, Int beta, Int gamma, Int delta,
                                      Int epsilon) {
  if (m < 1 || n < 1 || d < 1) throw InvalidArgument("m, n and d must be positive");
  CoveringOctuple o;
  o.m = m;
  o.n = n;
  o.d = d;
  o.alpha = mod(alpha, o.md());
  o.beta = mod(beta, o.md());
  o.gamma = mod(gamma, o.nd());
  o.delta = mod(delta, o.nd());
  o.epsilon = mod(epsilon, d);
  return o;
}

std::string CoveringOctuple::to_string() const {
  return "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(d) + ";" +
         std::to_string(alpha) + "," + std::to_string(beta) + "," + std::to_string(gamma) + "," +
         std::to_string(delta) + "," + std::to_string(epsilon) + ")";
}

std::vector<std::string> ConditionDiagnostics::failures() const {
  std::vector<std::string> out;
  if (!units) out.push_back("units");
  if (!cond1) out.push_back("COND1");
  if (!cond2) out.push_back("COND2");
  if (!cond3) out.push_back("COND3");
  if (!cond4) out.push_back("COND4");
  if (!cond5) out.push_back("COND5");
  return out;
}

ConditionDiagnostics validate_octuple(const CoveringOctuple& o) {
  const Int md = o.md(), nd = o.nd();
  ConditionDiagnostics c;
  c.units = is_unit(o.alpha, md) && is_unit(o.beta, md) && is_unit(o.gamma, nd) && is_unit(o.delta, nd) &&
            is_unit(o.epsilon, o.d);
  c.cond1 = congruent(o.alpha * o.alpha, 1, md) && congruent(o.beta * o.beta, 1, md);
  c.cond2 = congruent(o.gamma * o.gamma, 1, nd) && congruent(o.delta * o.delta, 1, nd);
  c.cond3 = congruent(o.beta, 1, o.m) && congruent(o.gamma, 1, o.n);
  c.cond4 = congruent(o.alpha, o.gamma, o.d) && congruent(o.beta, o.delta, o.d);
  // Exact quotients are only meaningful once COND3 holds.
  c.cond5 = c.cond3 && congruent((o.beta - 1) / o.m * o.epsilon + (o.gamma - 1) / o.n, 0, o.d);
  return c;
}

bool lemma_num_check(const CoveringOctuple& o) {
  return congruent((o.alpha + 1) * (o.beta - 1), 0, o.md()) &&
         congruent((o.delta + 1) * (o.gamma - 1), 0, o.nd());
}

Word word_u() { return parse_word("xYxy"); }
Word word_v() { return parse_word("yXyx"); }

Presentation covering_presentation(const CoveringOctuple& o) {
  const Int md = o.md(), nd = o.nd();
  const Word x = Word::generator(0), y = Word::generator(1);
  const Word u = word_u(), v = word_v();
  auto up = [&](Int e) { return u.pow(symmetric_residue(e, md)); };
  auto vp = [&](Int e) { return v.pow(symmetric_residue(e, nd)); };

  std::vector<Word> r;
  r.push_back(x.pow(4) * (up(o.alpha + 1) * vp(o.gamma - o.delta)).inverse());
  r.push_back(y.pow(4) * (up(o.beta - o.alpha) * vp(o.delta + 1)).inverse());
  r.push_back((x * y).pow(4) * (up(o.alpha + 1) * vp(o.gamma + o.delta)).inverse());
  r.push_back(u.pow(md));
  r.push_back(v.pow(nd));
  r.push_back(conjugate(u, x) * up(-o.alpha));
  r.push_back(conjugate(u, y) * up(-o.beta));
  r.push_back(conjugate(v, x) * vp(-o.gamma));
  r.push_back(conjugate(v, y) * vp(-o.delta));
  r.push_back(u.pow(o.m) * v.pow(-symmetric_residue(o.n * o.epsilon, nd)));
  for (auto& w : r) w = w.reduced();
  return Presentation(2, std::move(r));
}

FinAbGroup kernel_model(const CoveringOctuple& o) {
  return abgroup_from_relations(
      2, {{o.md(), 0}, {0, o.nd()}, {o.m, -checked::mul(o.n, o.epsilon)}});
}

namespace {

void require(bool ok, const CoveringOctuple& o, const std::string& what) {
  if (!ok) throw InvariantViolation("covering " + o.to_string() + ": " + what);
}

const Presentation& q8_presentation() {
  static const Presentation p = parse_presentation("(xy)4, xYxy, yXyx");
  return p;
}

}  // namespace

Covering build_covering(const CoveringOctuple& o, std::size_t max_cosets) {
  const ConditionDiagnostics diag = validate_octuple(o);
  if (!diag.valid()) throw InvalidArgument("octuple " + o.to_string() + " fails conditions");

  const Int md = o.md(), nd = o.nd(), mnd = o.mnd();
  const Presentation pres = covering_presentation(o);
  const CosetTable table = todd_coxeter(pres, {}, max_cosets);
  require(static_cast<Int>(table.num_cosets()) == 8 * mnd, o,
          "group order " + std::to_string(table.num_cosets()) + " != 8mnd");

  AlgebraicHypermap h(table.generator_permutation(0), table.generator_permutation(1), pres);
  const std::size_t deg = h.group().degree();
  const Permutation gens[2] = {h.x(), h.y()};
  Permutation u = evaluate_word(word_u(), gens, deg);
  Permutation v = evaluate_word(word_v(), gens, deg);

  require(u.order() == md, o, "o(u) != md");
  require(v.order() == nd, o, "o(v) != nd");
  require(u * v == v * u, o, "u and v do not commute");

  const Permutation kgens[2] = {u, v};
  const PermGroup k = subgroup_generated(deg, kgens);
  require(static_cast<Int>(k.order()) == mnd, o, "|K| != mnd");
  require(is_normal_in(k, h.group()), o, "K is not normal");

  // G acts regularly, so an element of K is determined by the image of 0.
  std::vector<bool> in_u(deg, false);
  std::vector<Point> u_orbit;  // u^i(0)
  for (Point p = 0, i = 0; i < static_cast<Point>(md); ++i, p = u[p]) {
    in_u[p] = true;
    u_orbit.push_back(p);
  }
  Int meet = 0;
  for (Point p = 0, j = 0; j < static_cast<Point>(nd); ++j, p = v[p])
    if (in_u[p]) ++meet;
  require(meet == o.d, o, "|<u> n <v>| != d");

  const std::vector<Permutation> qgens = quotient_action(h.group(), k);
  require(qgens.size() == 2 && qgens[0].degree() == 8, o, "G/K does not have order 8");
  const PermGroup quotient(8, qgens);
  require(extends_to_morphism(q8_presentation(), qgens, quotient, 8).kind == MorphismKind::automorphism, o,
          "G/K is not Q8 on the images of x, y");

  auto upow = [&](Int e) { return u.pow(mod(e, md)); };
  auto vpow = [&](Int e) { return v.pow(mod(e, nd)); };
  const Permutation xy = h.x() * h.y();
  require(h.x().pow(4) == upow(o.alpha + 1) * vpow(o.gamma - o.delta), o, "x^4 mismatch");
  require(h.y().pow(4) == upow(o.beta - o.alpha) * vpow(o.delta + 1), o, "y^4 mismatch");
  require(xy.pow(4) == upow(o.alpha + 1) * vpow(o.gamma + o.delta), o, "(xy)^4 mismatch");

  FinAbGroup model = kernel_model(o);
  require(model.order() == mnd, o, "abstract K has order " + std::to_string(model.order()));
  for (Int i = 0; i < md; ++i) {
    Point p = u_orbit[static_cast<std::size_t>(i)];
    for (Int j = 0; j < nd; ++j, p = v[p]) {
      const Int e[2] = {i, j};
      require((p == 0) == model.is_identity(model.from_exponents(e)), o,
              "concrete and abstract K disagree at u^" + std::to_string(i) + " v^" + std::to_string(j));
    }
  }

  // Cyclic iff some element has order |K|; orders are cycle lengths through 0.
  bool cyclic = false;
  for (const auto& g : k.elements()) {
    Int len = 1;
    for (Point p = g[0]; p != 0; p = g[p]) ++len;
    if (len == mnd) {
      cyclic = true;
      break;
    }
  }
  require(cyclic == model.is_cyclic(), o, "cyclicity of concrete and abstract K disagree");
  if (cyclic) {
    const PermGroup cu = subgroup_generated(deg, std::vector<Permutation>{u});
    const PermGroup cv = subgroup_generated(deg, std::vector<Permutation>{v});
    require(is_normal_in(cu, h.group()) && is_normal_in(cv, h.group()), o, "<u> or <v> not normal");
  }

  Covering out{o, std::move(h), std::move(u), std::move(v), std::move(model), k.order(), cyclic};
  return out;
}

PredictedTypeGenus predicted_type_genus(const CoveringOctuple& o) {
  const FinAbGroup k = kernel_model(o);
  auto order_of = [&k](Int i, Int j) {
    const Int e[2] = {i, j};
    return element_order(k, k.from_exponents(e));
  };
  PredictedTypeGenus out;
  out.p = order_of(o.alpha + 1, o.gamma - o.delta);
  out.q = order_of(o.beta - o.alpha, o.delta + 1);
  out.r = order_of(o.alpha + 1, o.gamma + o.delta);
  out.type = HypermapType{4 * out.p, 4 * out.q, 4 * out.r};
  const Int pqr = out.p * out.q * out.r;
  const Int num = checked::mul(o.mnd(), 4 * pqr - out.q * out.r - out.p * out.r - out.p * out.q);
  if (num % pqr != 0)
    throw InvariantViolation("predicted genus of " + o.to_string() + " is not an integer");
  out.genus = num / pqr + 1;
  return out;
}

SymmetryProfile SymmetryProfile::from_base(bool reflexible, bool symmetric, bool self_petrie,
                                           bool triply_self_dual) {
  SymmetryProfile s;
  s.reflexible = reflexible;
  s.symmetric = symmetric;
  s.self_petrie = self_petrie;
  s.triply_self_dual = triply_self_dual;
  s.omega1_invariant = symmetric && self_petrie;
  s.completely_self_dual = symmetric && triply_self_dual;
  s.mho_invariant = symmetric && self_petrie && triply_self_dual;
  return s;
}

SymmetryProfile symmetry_profile_congruence(const CoveringOctuple& o) {
  const Int md = o.md(), d = o.d;
  const bool reflexible = congruent(o.beta, o.gamma, d);
  const bool symmetric = o.m == o.n && congruent(o.alpha, o.delta, md) && congruent(o.beta, o.gamma, md) &&
                         congruent(o.epsilon * o.epsilon, 1, d);
  const bool petrie = congruent(o.alpha, -1, d);
  const bool triply = o.m == o.n && congruent(o.gamma, o.alpha + o.beta - 1, md) &&
                      congruent(o.delta, o.alpha, md) && congruent(o.alpha, o.beta, o.m) &&
                      congruent((o.alpha - o.beta) * o.epsilon, o.alpha - 1, md) &&
                      congruent(o.epsilon * o.epsilon + (2 - o.alpha) * o.epsilon + o.alpha, 0, d);
  return SymmetryProfile::from_base(reflexible, symmetric, petrie, triply);
}

SymmetryProfile symmetry_profile_group(const AlgebraicHypermap& h) {
  return SymmetryProfile::from_base(is_invariant(h, builtin_operation("iota")),
                                    is_invariant(h, builtin_operation("tau")),
                                    is_invariant(h, builtin_operation("pi")),
                                    is_invariant(h, builtin_operation("theta")));
}

SymmetryProfile symmetry_profile_group(const CoveringOctuple& o, std::size_t max_cosets) {
  return symmetry_profile_group(build_covering(o, max_cosets).hypermap);
}

BranchProfile branch_profile(const CoveringOctuple& o) {
  const PredictedTypeGenus t = predicted_type_genus(o);
  BranchProfile b;
  b.p = t.p;
  b.q = t.q;
  b.r = t.r;
  b.smooth_v = t.p == 1;
  b.smooth_e = t.q == 1;
  b.smooth_f = t.r == 1;

  // Quotients below are exact once the first two congruences hold.
  if (b.smooth_v) {
    const bool ok = divides(o.m, o.alpha + 1) && divides(o.n, o.delta - 1) && divides(o.n, o.gamma - o.delta) &&
                    congruent((o.alpha + 1) / o.m * o.epsilon + (o.gamma - o.delta) / o.n, 0, o.d);
    if (!ok) throw InvariantViolation("smooth at hypervertices but congruences fail for " + o.to_string());
  }
  if (b.smooth_e) {
    const bool ok = divides(o.m, o.alpha - 1) && divides(o.n, o.delta + 1) && divides(o.m, o.beta - o.alpha) &&
                    congruent((o.beta - o.alpha) / o.m * o.epsilon + (o.delta + 1) / o.n, 0, o.d);
    if (!ok) throw InvariantViolation("smooth at hyperedges but congruences fail for " + o.to_string());
  }
  if (b.smooth_f) {
    const bool ok = divides(o.m, o.alpha + 1) && divides(o.n, o.delta + 1) && divides(o.n, o.gamma + o.delta) &&
                    congruent((o.alpha + 1) / o.m * o.epsilon + (o.gamma + o.delta) / o.n, 0, o.d);
    if (!ok) throw InvariantViolation("smooth at hyperfaces but congruences fail for " + o.to_string());
  }
  return b;
}

std::vector<CoveringOctuple> valid_octuples_for(Int m, Int n, Int d) {
  const Int md = m * d, nd = n * d;
  std::vector<CoveringOctuple> out;
  // Loop order matches the lexicographic order of the fields.
  for (Int a = 0; a < md; ++a) {
    if (!is_unit(a, md) || !congruent(a * a, 1, md)) continue;
    for (Int b = 0; b < md; ++b) {
      if (!is_unit(b, md) || !congruent(b * b, 1, md) || !congruent(b, 1, m)) continue;
      for (Int g = 0; g < nd; ++g) {
        if (!is_unit(g, nd) || !congruent(g * g, 1, nd) || !congruent(g, 1, n)) continue;
        for (Int dl = 0; dl < nd; ++dl)
          for (Int e = 0; e < d; ++e) {
            const CoveringOctuple o = CoveringOctuple::make(m, n, d, a, b, g, dl, e);
            if (validate_octuple(o).valid()) out.push_back(o);
          }
      }
    }
  }
  return out;
}

std::vector<CoveringOctuple> valid_octuples(Int max_mnd) {
  std::vector<CoveringOctuple> out;
  for (Int m = 1; m <= max_mnd; ++m)
    for (Int n = 1; m * n <= max_mnd; ++n)
      for (Int d = 1; m * n * d <= max_mnd; ++d) {
        auto part = valid_octuples_for(m, n, d);
        out.insert(out.end(), part.begin(), part.end());
      }
  return out;
}

CensusRecord census_record(const CoveringOctuple& o, std::size_t max_cosets) {
  CensusRecord rec;
  rec.octuple = o;
  try {
    rec.predicted = predicted_type_genus(o);
    rec.symmetry = symmetry_profile_congruence(o);
    rec.lemma_num = lemma_num_check(o);
    rec.k_invariant_factors = kernel_model(o).invariant_factors();

    const Covering c = build_covering(o, max_cosets);
    rec.group_order = c.hypermap.order();
    rec.type = type_of(c.hypermap);
    rec.genus = genus_of(c.hypermap);
    rec.symmetry_group = symmetry_profile_group(c.hypermap);
    rec.k_cyclic = c.k_cyclic;
    rec.fingerprint = walsh_fingerprint(c.hypermap);
    rec.branch = branch_profile(o);

    rec.consistent = rec.type == rec.predicted.type && rec.genus == rec.predicted.genus &&
                     rec.symmetry == rec.symmetry_group && rec.lemma_num &&
                     rec.k_cyclic == (gcd(o.m, o.n) == 1);
    if (!rec.consistent) rec.error = "computed data disagree with the predictions";
  } catch (const ResourceError& e) {
    rec.group_order = 0;
    rec.consistent = false;
    rec.resource_failure = true;
    rec.error = e.what();
  } catch (const Error& e) {
    rec.group_order = 0;
    rec.consistent = false;
    rec.error = e.what();
  }
  return rec;
}

std::vector<CensusRecord> enumerate_census(Int max_mnd, const CensusOptions& options) {
  if (max_mnd < 1) throw InvalidArgument("max_mnd must be at least 1");
  const std::vector<CoveringOctuple> octuples = valid_octuples(max_mnd);
  std::vector<CensusRecord> records(octuples.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < octuples.size(); i = next++)
      records[i] = census_record(octuples[i], options.max_cosets);
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return records;
}

std::vector<CensusRecord> smooth_covers(Int max_mnd, const CensusOptions& options) {
  std::vector<CensusRecord> out;
  for (auto& r : enumerate_census(max_mnd, options))
    if (r.predicted.p == 1 && r.predicted.q == 1 && r.predicted.r == 1) out.push_back(std::move(r));
  return out;
}

bool omega1_family_conditions(const CoveringOctuple& o) {
  const Int md = o.md(), d = o.d;
  const Int a = o.alpha, b = o.beta, e = o.epsilon;
  return o.m == o.n && congruent(o.gamma, b, md) && congruent(o.delta, a, md) && congruent(a * a, 1, md) &&
         congruent(b * b, 1, md) && congruent((b - 1) * (e + 1), 0, md) && congruent(b, 1, o.m) &&
         congruent(b, -1, d) && congruent(a, b, d) && congruent(e * e, 1, d);
}

std::vector<CheckItem> special_families(Int m, std::size_t max_cosets) {
  if (m < 1) throw InvalidArgument("m must be positive");
  std::vector<CheckItem> out;
  const std::string tag = "(" + std::to_string(m) + ")";

  {
    const CoveringOctuple k1 = CoveringOctuple::make(m, m, 1, 1, 1, 1, 1, 1);
    const Covering c = build_covering(k1, max_cosets);
    const SymmetryProfile sc = symmetry_profile_congruence(k1);
    const SymmetryProfile sg = symmetry_profile_group(c.hypermap);
    const bool varsigma = is_invariant(c.hypermap, builtin_operation("varsigma"));
    const bool ok = sc == sg && sg.completely_self_dual && sg.mho_invariant && varsigma;
    out.push_back({"K1" + tag + " completely self-dual, mho- and varsigma-invariant", status_of(ok),
                   "order " + std::to_string(c.hypermap.order()) + ", varsigma " + (varsigma ? "yes" : "no")});
  }
  {
    const CoveringOctuple k2 = CoveringOctuple::make(m, m, 3, 1, 1, 1, 1, 1);
    const Covering c = build_covering(k2, max_cosets);
    const SymmetryProfile sc = symmetry_profile_congruence(k2);
    const SymmetryProfile sg = symmetry_profile_group(c.hypermap);
    out.push_back({"K2" + tag + " completely self-dual", status_of(sc == sg && sg.completely_self_dual),
                   "order " + std::to_string(c.hypermap.order())});

    const auto& f = c.k_model.invariant_factors();
    std::string factors;
    for (Int x : f) factors += (factors.empty() ? "Z" : " x Z") + std::to_string(x);
    if (factors.empty()) factors = "trivial";
    // The stated structure Z3 x Z3m has order 9m, against |K| = mnd = 3m^2.
    const bool stated = f == std::vector<Int>{3, 3 * m};
    out.push_back({"K2" + tag + " kernel structure",
                   stated ? CheckStatus::pass : CheckStatus::flagged_discrepancy,
                   "computed K = " + factors + " (order " + std::to_string(c.k_model.order()) +
                       "); stated Z3 x Z" + std::to_string(3 * m)});
  }
  {
    std::size_t invariant = 0;
    bool ok = true;
    std::size_t mho = 0;
    bool mho_ok = true;
    std::size_t csd = 0;
    bool csd_ok = true;
    for (Int d = 1; d <= 8; ++d)
      for (const auto& o : valid_octuples_for(m, m, d)) {
        const SymmetryProfile s = symmetry_profile_congruence(o);
        if (s.omega1_invariant) {
          ++invariant;
          ok = ok && omega1_family_conditions(o);
        }
        const bool is_k1 = o == CoveringOctuple::make(m, m, 1, 1, 1, 1, 1, 1);
        const bool is_k2 = o == CoveringOctuple::make(m, m, 3, 1, 1, 1, 1, 1);
        if (s.mho_invariant) {
          ++mho;
          mho_ok = mho_ok && is_k1;
        }
        if (s.completely_self_dual) {
          ++csd;
          csd_ok = csd_ok && (is_k1 || is_k2);
        }
      }
    out.push_back({"Omega1-invariant octuples with m=n=" + std::to_string(m) + ", d<=8 meet the family conditions",
                   status_of(ok), std::to_string(invariant) + " invariant octuples"});
    out.push_back({"completely self-dual octuples with m=n=" + std::to_string(m) + ", d<=8 are K1 or K2",
                   status_of(csd_ok && csd == 2), std::to_string(csd) + " found"});
    out.push_back({"mho-invariant octuples with m=n=" + std::to_string(m) + ", d<=8 are K1",
                   status_of(mho_ok && mho == 1), std::to_string(mho) + " found"});
  }
  return out;
}

NilpotencyAudit nilpotency_audit(const PermGroup& g, const std::vector<Permutation>& parts) {
  NilpotencyAudit a;
  a.bound = static_cast<int>(parts.size());
  a.parts_normal = true;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const PermGroup c = subgroup_generated(g.degree(), std::vector<Permutation>{parts[i]});
    if (!is_normal_in(c, g)) {
      a.parts_normal = false;
      a.detail += "part " + std::to_string(i) + " does not generate a normal subgroup; ";
    }
  }
  const PermGroup k = subgroup_generated(g.degree(), parts);
  a.k_order = k.order();
  a.nilpotency_class = lower_central_series(k).nilpotency_class;
  a.within_bound = a.parts_normal && a.nilpotency_class && *a.nilpotency_class <= a.bound;
  a.detail += "|K| = " + std::to_string(a.k_order) + ", class " +
              (a.nilpotency_class ? std::to_string(*a.nilpotency_class) : std::string("none")) + " (bound " +
              std::to_string(a.bound) + ")";
  return a;
}

}  // namespace qcover
