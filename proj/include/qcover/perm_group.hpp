#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qcover/coset_enumeration.hpp"
#include "qcover/permutation.hpp"
#include "qcover/word.hpp"

namespace qcover {

inline constexpr std::size_t kDefaultElementCap = 20000;
inline constexpr std::size_t kPairEnumerationCap = 512;

/// A finite permutation group stored as its full element list. Element 0 is
/// always the identity.
class PermGroup {
 public:
  /// Closes `generators` under multiplication. Throws ResourceError when the
  /// closure exceeds `element_cap`.
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::size_t element_cap = kDefaultElementCap);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  Permutation identity() const { return Permutation(degree_); }

  bool contains(const Permutation& p) const { return index_.contains(p); }
  std::optional<std::size_t> index_of(const Permutation& p) const;

  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;
  /// Transitive with order equal to degree.
  bool is_regular() const { return regular_; }
  /// Every element of `other` lies in this group.
  bool contains_group(const PermGroup& other) const;

  friend bool same_group(const PermGroup& a, const PermGroup& b) {
    return a.order() == b.order() && a.contains_group(b);
  }

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
  bool regular_ = false;
};

/// The group generated by `elements`; an empty list yields the trivial group.
PermGroup subgroup_generated(std::size_t degree, std::span<const Permutation> elements,
                             std::size_t element_cap = kDefaultElementCap);

/// Smallest normal subgroup of `g` containing `seeds`.
PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> seeds);

/// Every conjugate of every generator of `sub` by a generator of `g` lies in `sub`.
bool is_normal_in(const PermGroup& sub, const PermGroup& g);

/// [a, b] subgroup for a normal subgroup `a` of `g` with `b` = g.
PermGroup commutator_subgroup(const PermGroup& a, const PermGroup& g);
PermGroup derived_subgroup(const PermGroup& g);

struct LowerCentralSeries {
  /// G = G_1 >= G_2 >= ... up to and including the first repeated or trivial term.
  std::vector<PermGroup> terms;
  /// s with G_{s+1} = 1, absent when the series stabilizes above 1.
  std::optional<int> nilpotency_class;
};

LowerCentralSeries lower_central_series(const PermGroup& g);

/// Action of `g` on the orbits of a normal subgroup `n` (the blocks of the
/// quotient). Returns one permutation per generator of `g`.
std::vector<Permutation> quotient_action(const PermGroup& g, const PermGroup& n);

/// Regular representation of a finitely presented group, via enumeration of
/// the cosets of the trivial subgroup.
struct RegularRepresentation {
  PermGroup group;
  std::vector<Permutation> generators;  // one per generator of the presentation
};

RegularRepresentation regular_representation(const Presentation& p,
                                             std::size_t max_cosets = kDefaultMaxCosets);

enum class MorphismKind { not_hom, hom_onto_subgroup, epimorphism, automorphism };

const char* to_string(MorphismKind k);

struct MorphismResult {
  MorphismKind kind = MorphismKind::not_hom;
  std::size_t image_order = 0;
};

/// Decides whether generator images satisfy the relators of `p` and, if so,
/// how large the image is. `source_order` is |<gens | relators>|; when
/// omitted it is computed by coset enumeration.
MorphismResult extends_to_morphism(const Presentation& p, std::span<const Permutation> images,
                                   const PermGroup& target,
                                   std::optional<std::size_t> source_order = std::nullopt);

/// Ordered pairs of element indices (a, b) with <a, b> = G.
std::vector<std::pair<std::size_t, std::size_t>> generating_pairs(const PermGroup& g);

/// Number of generating pairs onto which the generators of `p` can be sent
/// by an automorphism, i.e. |Aut(G)| when `p` presents G on two generators.
std::size_t automorphism_count(const PermGroup& g, const Presentation& p);

/// Generator images in `g` that extend to an isomorphism from the group
/// presented by `p`, found by exhaustive search filtered by element orders.
std::optional<std::vector<Permutation>> find_isomorphism(const Presentation& p, const PermGroup& g,
                                                         std::size_t max_cosets = kDefaultMaxCosets);

/// Order of the subgroup generated by `gens` inside a regular group, read off
/// as the orbit length of point 0.
std::size_t regular_subgroup_order(std::span<const Permutation> gens);

}  // namespace qcover
