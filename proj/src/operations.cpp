#include "qcover/operations.hpp"

#include <algorithm>
#include <set>

#include "qcover/errors.hpp"

namespace qcover {

Int Mat2Z::det() const { return checked::sub(checked::mul(a, d), checked::mul(b, c)); }

Mat2Z Mat2Z::inverse() const {
  const Int dt = det();
  if (dt != 1 && dt != -1) throw InvalidArgument("matrix is not invertible over Z");
  return {d * dt, -b * dt, -c * dt, a * dt};
}

Mat2Z operator*(const Mat2Z& l, const Mat2Z& r) {
  using namespace checked;
  return {add(mul(l.a, r.a), mul(l.b, r.c)), add(mul(l.a, r.b), mul(l.b, r.d)),
          add(mul(l.c, r.a), mul(l.d, r.c)), add(mul(l.c, r.b), mul(l.d, r.d))};
}

std::string Mat2Z::to_string() const {
  return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," +
         std::to_string(d) + "]]";
}

GenSubstitution GenSubstitution::inverse() const {
  return {name + "^-1", inverse_x, inverse_y, image_x, image_y};
}

namespace {

GenSubstitution make(std::string name, const char* ix, const char* iy, const char* jx, const char* jy) {
  return {std::move(name), parse_word(ix), parse_word(iy), parse_word(jx), parse_word(jy)};
}

}  // namespace

const std::vector<GenSubstitution>& builtin_operations() {
  static const std::vector<GenSubstitution> catalog = {
      make("tau", "y", "x", "y", "x"),
      make("pi", "x", "Y", "x", "Y"),
      make("pi1", "X", "y", "X", "y"),
      make("iota", "X", "Y", "X", "Y"),
      make("varsigma", "Y", "yx", "xy", "X"),
      make("theta", "YX", "x", "y", "YX"),
      make("zeta", "xy", "y", "xY", "y"),
      make("eta", "x", "yx", "x", "yX"),
  };
  return catalog;
}

const GenSubstitution& builtin_operation(std::string_view name) {
  for (const auto& s : builtin_operations())
    if (s.name == name) return s;
  throw InvalidArgument("unknown operation: " + std::string(name));
}

GenSubstitution identity_substitution() { return make("id", "x", "y", "x", "y"); }

GenSubstitution compose(const GenSubstitution& s1, const GenSubstitution& s2) {
  const std::vector<Word> first = {s1.image_x, s1.image_y};
  const std::vector<Word> undo = {s2.inverse_x, s2.inverse_y};
  return {s1.name + "*" + s2.name,
          substitute(s2.image_x, first).reduced(),
          substitute(s2.image_y, first).reduced(),
          substitute(s1.inverse_x, undo).reduced(),
          substitute(s1.inverse_y, undo).reduced()};
}

Mat2Z abelianize(const GenSubstitution& s) {
  const auto ex = s.image_x.exponent_sums(2);
  const auto ey = s.image_y.exponent_sums(2);
  const Mat2Z m{ex[0], ex[1], ey[0], ey[1]};
  const Int dt = m.det();
  if (dt != 1 && dt != -1)
    throw InvalidArgument("substitution " + s.name + " has abelianized determinant " + std::to_string(dt));
  return m;
}

AlgebraicHypermap apply_operation(const AlgebraicHypermap& h, const GenSubstitution& s) {
  const Permutation gens[2] = {h.x(), h.y()};
  Permutation nx = evaluate_word(s.image_x, gens, h.group().degree());
  Permutation ny = evaluate_word(s.image_y, gens, h.group().degree());
  const Permutation pair[2] = {nx, ny};
  if (regular_subgroup_order(pair) != h.order())
    throw InvalidArgument("images under " + s.name + " do not generate the group");
  const std::vector<Word> back = {s.inverse_x, s.inverse_y};
  std::vector<Word> relators;
  for (const Word& r : h.source().relators()) relators.push_back(substitute(r, back).reduced());
  return AlgebraicHypermap(std::move(nx), std::move(ny), Presentation(2, std::move(relators)));
}

bool is_invariant(const AlgebraicHypermap& h, const GenSubstitution& s) {
  const Permutation gens[2] = {h.x(), h.y()};
  const Permutation images[2] = {evaluate_word(s.image_x, gens, h.group().degree()),
                                 evaluate_word(s.image_y, gens, h.group().degree())};
  return extends_to_morphism(h.source(), images, h.group(), h.order()).kind == MorphismKind::automorphism;
}

// ---------------------------------------------------------------- matrix groups

namespace {

Int matrix_order(const Mat2Z& m, std::size_t cap) {
  Mat2Z p = m;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (p == Mat2Z::identity()) return static_cast<Int>(k);
    p = p * m;
  }
  throw ResourceError("matrix of infinite or excessive order: " + m.to_string());
}

}  // namespace

std::string structure_label(const std::vector<Mat2Z>& elements) {
  const std::size_t n = elements.size();
  bool abelian = true;
  for (const auto& g : elements)
    for (const auto& h : elements)
      if (g * h != h * g) abelian = false;
  std::size_t involutions = 0;
  Int max_order = 1;
  for (const auto& g : elements) {
    const Int o = matrix_order(g, n);
    if (o == 2) ++involutions;
    max_order = std::max(max_order, o);
  }
  const auto ns = std::to_string(n);
  if (abelian) {
    if (max_order == static_cast<Int>(n)) return "cyclic " + ns;
    if (n == 4) return "V4";
    return "abelian " + ns;
  }
  if (n == 6) return "Sym(3)";
  // Dihedral of order 2k: a cyclic subgroup of index 2 and every element
  // outside it an involution, so at least k involutions.
  if (max_order * 2 == static_cast<Int>(n) && involutions >= n / 2) return "dihedral " + ns;
  return "order " + ns;
}

OpGroupReport matrix_group_closure(const std::vector<Mat2Z>& gens, std::size_t cap) {
  if (cap < 1) throw InvalidArgument("cap must be at least 1");
  std::set<Mat2Z> seen{Mat2Z::identity()};
  std::vector<Mat2Z> queue{Mat2Z::identity()};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      const Mat2Z next = queue[i] * g;
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw ResourceError("matrix group exceeds " + std::to_string(cap) + " elements; likely infinite");
        queue.push_back(next);
      }
    }
  OpGroupReport r;
  r.elements.assign(seen.begin(), seen.end());
  r.order = r.elements.size();
  r.structure_label = structure_label(r.elements);
  return r;
}

std::vector<CheckItem> verify_hasse() {
  const Mat2Z T = abelianize(builtin_operation("tau"));
  const Mat2Z P = abelianize(builtin_operation("pi"));
  const Mat2Z D = abelianize(builtin_operation("theta"));
  const Mat2Z S = abelianize(builtin_operation("varsigma"));
  const Mat2Z I = abelianize(builtin_operation("iota"));

  std::vector<CheckItem> out;
  auto check = [&out](std::string id, bool pass, std::string detail) {
    out.push_back({std::move(id), status_of(pass), std::move(detail)});
  };

  check("shadows", T == Mat2Z{0, 1, 1, 0} && P == Mat2Z{1, 0, 0, -1} && D == Mat2Z{-1, -1, 1, 0} &&
                       S == Mat2Z{0, -1, 1, 1} && I == -Mat2Z::identity(),
        "T=" + T.to_string() + " P=" + P.to_string() + " D=" + D.to_string() + " S=" + S.to_string() +
            " iota=" + I.to_string());

  const OpGroupReport tau = matrix_group_closure({T});
  const OpGroupReport pi = matrix_group_closure({P});
  const OpGroupReport iota = matrix_group_closure({I});
  const OpGroupReport theta = matrix_group_closure({D});
  const OpGroupReport l1 = matrix_group_closure({P, I});
  const OpGroupReport l2 = matrix_group_closure({I, T});
  const OpGroupReport l3 = matrix_group_closure({T, D});
  const OpGroupReport o1 = matrix_group_closure({P, T});
  const OpGroupReport o2 = matrix_group_closure({T, S});

  auto describe = [](const OpGroupReport& r) {
    return "order " + std::to_string(r.order) + ", " + r.structure_label;
  };
  check("Lambda1 = <pi, iota> is V4", l1.order == 4 && l1.structure_label == "V4", describe(l1));
  check("Lambda2 = <iota, tau> is V4", l2.order == 4 && l2.structure_label == "V4", describe(l2));
  check("Lambda3 = <tau, theta> is Sym(3)", l3.order == 6 && l3.structure_label == "Sym(3)", describe(l3));
  check("Omega1 = <pi, tau> is D8", o1.order == 8 && o1.structure_label == "dihedral 8", describe(o1));
  check("Omega2 = <tau, varsigma> is D12", o2.order == 12 && o2.structure_label == "dihedral 12",
        describe(o2));

  auto contained = [](const OpGroupReport& small, const OpGroupReport& big) {
    return std::includes(big.elements.begin(), big.elements.end(), small.elements.begin(),
                         small.elements.end());
  };
  auto unimodular = [](const OpGroupReport& r) {
    return std::all_of(r.elements.begin(), r.elements.end(), [](const Mat2Z& m) {
      const Int dt = m.det();
      return dt == 1 || dt == -1;
    });
  };
  const OpGroupReport trivial = matrix_group_closure({});
  struct Edge {
    const char* name;
    const OpGroupReport& small;
    const OpGroupReport& big;
  };
  const Edge edges[] = {
      {"1 < <pi>", trivial, pi},          {"1 < <iota>", trivial, iota},
      {"1 < <tau>", trivial, tau},        {"1 < <theta>", trivial, theta},
      {"<pi> < Lambda1", pi, l1},         {"<iota> < Lambda1", iota, l1},
      {"<iota> < Lambda2", iota, l2},     {"<tau> < Lambda2", tau, l2},
      {"<tau> < Lambda3", tau, l3},       {"<theta> < Lambda3", theta, l3},
      {"Lambda1 < Omega1", l1, o1},       {"Lambda2 < Omega1", l2, o1},
      {"Lambda2 < Omega2", l2, o2},       {"Lambda3 < Omega2", l3, o2},
  };
  for (const auto& e : edges) check(e.name, contained(e.small, e.big), "");
  check("Omega1 < Omega", unimodular(o1), "every element has determinant +-1");
  check("Omega2 < Omega", unimodular(o2), "every element has determinant +-1");

  const Mat2Z sinv = S.inverse();
  const Mat2Z tdt = T * D * T;
  check("D = S^2", D == S * S, "S^2=" + (S * S).to_string());
  check("S^-1 T S = T D", sinv * T * S == T * D,
        "S^-1TS=" + (sinv * T * S).to_string() + " TD=" + (T * D).to_string());
  check("S^-1 P S = (TDT)^-1 P (TDT)", sinv * P * S == tdt.inverse() * P * tdt,
        "S^-1PS=" + (sinv * P * S).to_string() + " (TDT)^-1P(TDT)=" + (tdt.inverse() * P * tdt).to_string());
  return out;
}

}  // namespace qcover
