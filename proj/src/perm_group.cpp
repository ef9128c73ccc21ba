#include "qcover/perm_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "qcover/errors.hpp"

namespace qcover {

namespace {

std::vector<Point> orbit_of(Point start, std::span<const Permutation> gens, std::size_t degree) {
  std::vector<bool> seen(degree, false);
  std::vector<Point> orbit{start};
  seen[start] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& g : gens) {
      const Point q = g[orbit[i]];
      if (!seen[q]) {
        seen[q] = true;
        orbit.push_back(q);
      }
    }
  return orbit;
}

bool relators_hold(const Presentation& p, std::span<const Permutation> images, const PermGroup& target) {
  if (target.is_regular()) {
    // In a regular group only the identity fixes a point.
    std::vector<Permutation> inverses;
    for (const auto& g : images) inverses.push_back(g.inverse());
    for (const Word& r : p.relators())
      if (trace_word(0, r, images, inverses) != 0) return false;
    return true;
  }
  for (const Word& r : p.relators())
    if (!evaluate_word(r, images, target.degree()).is_identity()) return false;
  return true;
}

std::size_t generated_order(std::span<const Permutation> gens, const PermGroup& within) {
  if (within.is_regular()) return regular_subgroup_order(gens);
  return subgroup_generated(within.degree(), gens).order();
}

}  // namespace

// ---------------------------------------------------------------- PermGroup

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, std::size_t element_cap)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw InvalidArgument("generator degree does not match group degree");
  elements_.push_back(Permutation(degree_));
  index_.emplace(elements_.back(), 0);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (const auto& g : generators_) {
      Permutation next = elements_[i] * g;
      if (index_.contains(next)) continue;
      if (elements_.size() >= element_cap)
        throw ResourceError("group closure exceeded the element cap of " + std::to_string(element_cap));
      index_.emplace(next, elements_.size());
      elements_.push_back(std::move(next));
    }
  }
  regular_ = degree_ > 0 && elements_.size() == degree_ &&
             orbit_of(0, generators_, degree_).size() == degree_;
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
  return true;
}

bool PermGroup::contains_group(const PermGroup& other) const {
  if (other.degree() != degree_) return false;
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [this](const Permutation& g) { return contains(g); });
}

// ---------------------------------------------------------------- constructions

PermGroup subgroup_generated(std::size_t degree, std::span<const Permutation> elements,
                             std::size_t element_cap) {
  std::vector<Permutation> gens;
  for (const auto& e : elements) {
    if (e.degree() != degree) throw InvalidArgument("element degree does not match");
    if (!e.is_identity() && std::find(gens.begin(), gens.end(), e) == gens.end()) gens.push_back(e);
  }
  return PermGroup(degree, std::move(gens), element_cap);
}

PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> seeds) {
  std::vector<Permutation> gens;
  for (const auto& s : seeds)
    if (!s.is_identity()) gens.push_back(s);
  PermGroup current = subgroup_generated(g.degree(), gens);
  // Add conjugates of the current generators until the group is closed under
  // conjugation by the generators of g.
  for (;;) {
    std::vector<Permutation> extra;
    for (const auto& h : current.generators())
      for (const auto& x : g.generators()) {
        Permutation c = conjugate(h, x);
        if (!current.contains(c) &&
            std::find(extra.begin(), extra.end(), c) == extra.end())
          extra.push_back(std::move(c));
      }
    if (extra.empty()) return current;
    std::vector<Permutation> all = current.generators();
    all.insert(all.end(), extra.begin(), extra.end());
    current = subgroup_generated(g.degree(), all);
  }
}

bool is_normal_in(const PermGroup& sub, const PermGroup& g) {
  for (const auto& h : sub.generators())
    for (const auto& x : g.generators())
      if (!sub.contains(conjugate(h, x))) return false;
  return true;
}

PermGroup commutator_subgroup(const PermGroup& a, const PermGroup& g) {
  std::vector<Permutation> comms;
  for (const auto& s : a.generators())
    for (const auto& t : g.generators()) {
      Permutation c = commutator(s, t);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(g, comms);
}

PermGroup derived_subgroup(const PermGroup& g) { return commutator_subgroup(g, g); }

LowerCentralSeries lower_central_series(const PermGroup& g) {
  LowerCentralSeries out;
  out.terms.push_back(g);
  for (;;) {
    const PermGroup& last = out.terms.back();
    if (last.is_trivial()) {
      out.nilpotency_class = static_cast<int>(out.terms.size()) - 1;
      return out;
    }
    PermGroup next = commutator_subgroup(last, g);
    const bool stable = next.order() == last.order();
    out.terms.push_back(std::move(next));
    if (stable) {
      out.terms.pop_back();
      return out;
    }
  }
}

std::vector<Permutation> quotient_action(const PermGroup& g, const PermGroup& n) {
  const std::size_t deg = g.degree();
  std::vector<std::int64_t> block(deg, -1);
  std::size_t nblocks = 0;
  for (Point p = 0; p < deg; ++p) {
    if (block[p] >= 0) continue;
    for (Point q : orbit_of(p, n.generators(), deg)) block[q] = static_cast<std::int64_t>(nblocks);
    ++nblocks;
  }
  std::vector<Permutation> out;
  for (const auto& x : g.generators()) {
    std::vector<Point> img(nblocks, static_cast<Point>(-1));
    for (Point p = 0; p < deg; ++p) {
      const auto b = static_cast<std::size_t>(block[p]);
      const auto target = static_cast<Point>(block[x[p]]);
      if (img[b] == static_cast<Point>(-1))
        img[b] = target;
      else if (img[b] != target)
        throw InvalidArgument("orbits of the subgroup are not blocks of the group");
    }
    out.emplace_back(std::move(img));
  }
  return out;
}

RegularRepresentation regular_representation(const Presentation& p, std::size_t max_cosets) {
  const CosetTable table = todd_coxeter(p, {}, max_cosets);
  std::vector<Permutation> gens = table.generator_permutations();
  PermGroup group(table.num_cosets(), gens, std::max(kDefaultElementCap, table.num_cosets()));
  return RegularRepresentation{std::move(group), std::move(gens)};
}

const char* to_string(MorphismKind k) {
  switch (k) {
    case MorphismKind::not_hom: return "not_hom";
    case MorphismKind::hom_onto_subgroup: return "hom_onto_subgroup";
    case MorphismKind::epimorphism: return "epimorphism";
    case MorphismKind::automorphism: return "automorphism";
  }
  return "?";
}

MorphismResult extends_to_morphism(const Presentation& p, std::span<const Permutation> images,
                                   const PermGroup& target, std::optional<std::size_t> source_order) {
  if (images.size() != static_cast<std::size_t>(p.num_gens()))
    throw InvalidArgument("one image per generator is required");
  for (const auto& im : images)
    if (im.degree() != target.degree()) throw InvalidArgument("image degree does not match target");

  MorphismResult out;
  if (!relators_hold(p, images, target)) return out;
  out.image_order = generated_order(images, target);
  if (out.image_order < target.order()) {
    out.kind = MorphismKind::hom_onto_subgroup;
    return out;
  }
  const std::size_t src = source_order ? *source_order : todd_coxeter(p, {}).num_cosets();
  out.kind = src == target.order() ? MorphismKind::automorphism : MorphismKind::epimorphism;
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> generating_pairs(const PermGroup& g) {
  if (g.order() > kPairEnumerationCap)
    throw ResourceError("pair enumeration is limited to groups of order " +
                        std::to_string(kPairEnumerationCap));
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j) {
      const Permutation pair[2] = {g.element(i), g.element(j)};
      if (generated_order(pair, g) == g.order()) out.emplace_back(i, j);
    }
  return out;
}

std::size_t automorphism_count(const PermGroup& g, const Presentation& p) {
  if (p.num_gens() != 2) throw InvalidArgument("automorphism_count needs a two-generator presentation");
  if (g.order() > kPairEnumerationCap)
    throw ResourceError("pair enumeration is limited to groups of order " +
                        std::to_string(kPairEnumerationCap));
  const std::size_t src = todd_coxeter(p, {}).num_cosets();
  if (src != g.order()) return 0;
  std::size_t count = 0;
  for (const auto& [i, j] : generating_pairs(g)) {
    const Permutation pair[2] = {g.element(i), g.element(j)};
    if (relators_hold(p, pair, g)) ++count;
  }
  return count;
}

std::optional<std::vector<Permutation>> find_isomorphism(const Presentation& p, const PermGroup& g,
                                                         std::size_t max_cosets) {
  const RegularRepresentation src = regular_representation(p, max_cosets);
  if (src.group.order() != g.order()) return std::nullopt;
  const auto k = static_cast<std::size_t>(p.num_gens());

  std::vector<std::vector<std::size_t>> candidates(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Int want = src.generators[i].order();
    for (std::size_t e = 0; e < g.order(); ++e)
      if (g.element(e).order() == want) candidates[i].push_back(e);
  }

  std::vector<std::size_t> pick(k, 0);
  std::vector<Permutation> images(k);
  // Odometer over the candidate lists.
  for (;;) {
    bool empty = false;
    for (std::size_t i = 0; i < k; ++i) {
      if (candidates[i].empty()) {
        empty = true;
        break;
      }
      images[i] = g.element(candidates[i][pick[i]]);
    }
    if (empty) return std::nullopt;
    if (relators_hold(p, images, g) && generated_order(images, g) == g.order()) return images;
    std::size_t i = 0;
    while (i < k && ++pick[i] == candidates[i].size()) pick[i++] = 0;
    if (i == k) return std::nullopt;
  }
}

std::size_t regular_subgroup_order(std::span<const Permutation> gens) {
  if (gens.empty()) return 1;
  return orbit_of(0, gens, gens.front().degree()).size();
}

}  // namespace qcover
