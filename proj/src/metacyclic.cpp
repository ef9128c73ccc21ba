#include "qcover/metacyclic.hpp"

#include <algorithm>

#include "qcover/errors.hpp"

namespace qcover {

namespace {

Int ipow(Int base, Int e) {
  Int r = 1;
  for (Int i = 0; i < e; ++i) r = checked::mul(r, base);
  return r;
}

Int symmetric_residue(Int a, Int n) {
  const Int r = mod(a, n);
  return r > n / 2 ? r - n : r;
}

std::vector<Int> factors_of_cyclic_product(std::vector<Int> orders) {
  std::vector<std::vector<Int>> rows;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::vector<Int> r(orders.size(), 0);
    r[i] = orders[i];
    rows.push_back(std::move(r));
  }
  return abgroup_from_relations(orders.size(), rows).invariant_factors();
}

}  // namespace

std::string MetacyclicParams::to_string() const {
  return "(p=" + std::to_string(p) + ", a=" + std::to_string(a) + ", b=" + std::to_string(b) +
         ", c=" + std::to_string(c) + ", d=" + std::to_string(d) + ")";
}

Presentation metacyclic_presentation(const MetacyclicParams& mp) {
  const Word u = Word::generator(0), v = Word::generator(1);
  const Int ou = ipow(mp.p, mp.a + mp.c);
  const Int ov = ipow(mp.p, mp.b + mp.c);
  std::vector<Word> r;
  r.push_back(u.pow(ou));
  r.push_back(v.pow(ov));
  r.push_back(u.pow(ipow(mp.p, mp.a)) * v.pow(-ipow(mp.p, mp.b)));
  r.push_back(conjugate(u, v) * u.pow(-symmetric_residue(1 + ipow(mp.p, mp.a + mp.d), ou)));
  r.push_back(conjugate(v, u) * v.pow(-symmetric_residue(1 - ipow(mp.p, mp.b + mp.d), ov)));
  for (auto& w : r) w = w.reduced();
  return Presentation(2, std::move(r));
}

std::vector<Int> abelianization_factors(const Presentation& p) {
  std::vector<std::vector<Int>> rows;
  for (const Word& w : p.relators()) rows.push_back(w.exponent_sums(p.num_gens()));
  return abgroup_from_relations(static_cast<std::size_t>(p.num_gens()), rows).invariant_factors();
}

std::vector<Int> MetacyclicReport::invariant_vector() const {
  std::vector<Int> v{static_cast<Int>(order), static_cast<Int>(derived_order)};
  v.insert(v.end(), abelianization.begin(), abelianization.end());
  return v;
}

bool MetacyclicReport::matches() const {
  return order == expected_order && derived_order == expected_derived_order && derived_cyclic_on_power &&
         abelianization == expected_abelianization && abelianization_order_consistent;
}

RegularRepresentation metacyclic_regular(const MetacyclicParams& mp, std::size_t max_cosets) {
  if (!mp.chain_holds()) throw InvalidArgument("parameters " + mp.to_string() + " violate the chain");
  return regular_representation(metacyclic_presentation(mp), max_cosets);
}

MetacyclicReport metacyclic_group(const MetacyclicParams& mp, std::size_t max_cosets) {
  const Presentation pres = metacyclic_presentation(mp);
  const RegularRepresentation rep = metacyclic_regular(mp, max_cosets);
  const PermGroup& g = rep.group;

  MetacyclicReport r;
  r.params = mp;
  r.order = g.order();
  r.expected_order = static_cast<std::size_t>(ipow(mp.p, mp.a + mp.b + mp.c));
  const PermGroup derived = derived_subgroup(g);
  r.derived_order = derived.order();
  r.expected_derived_order = static_cast<std::size_t>(ipow(mp.p, mp.c - mp.d));
  const Permutation power = rep.generators[0].pow(ipow(mp.p, mp.a + mp.d));
  r.derived_cyclic_on_power =
      derived.contains(power) &&
      subgroup_generated(g.degree(), std::vector<Permutation>{power}).order() == derived.order();
  r.abelianization = abelianization_factors(pres);
  r.expected_abelianization = factors_of_cyclic_product({ipow(mp.p, mp.a), ipow(mp.p, mp.b + mp.d)});
  Int ab_order = 1;
  for (Int f : r.abelianization) ab_order *= f;
  r.abelianization_order_consistent = ab_order * static_cast<Int>(r.derived_order) == static_cast<Int>(r.order);
  r.nilpotency_class = lower_central_series(g).nilpotency_class;
  return r;
}

std::vector<MetacyclicParams> metacyclic_grid(const std::vector<Int>& primes, Int max_exponent) {
  std::vector<MetacyclicParams> out;
  for (Int p : primes)
    for (Int a = 0; a <= max_exponent; ++a)
      for (Int b = 0; b <= max_exponent; ++b)
        for (Int c = 0; c <= max_exponent; ++c)
          for (Int d = 0; d <= max_exponent; ++d) {
            const MetacyclicParams mp{p, a, b, c, d};
            if (mp.chain_holds()) out.push_back(mp);
          }
  return out;
}

}  // namespace qcover
