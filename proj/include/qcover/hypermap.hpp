#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qcover/perm_group.hpp"

namespace qcover {

struct HypermapType {
  Int ox = 1;
  Int oy = 1;
  Int oxy = 1;

  friend bool operator==(const HypermapType&, const HypermapType&) = default;
  std::string to_string() const;
};

/// A regular hypermap (G, x, y): G acts regularly on itself, x and y are the
/// distinguished generators, and `source` presents G on x, y.
class AlgebraicHypermap {
 public:
  /// Throws InvalidArgument unless <x, y> acts regularly.
  AlgebraicHypermap(Permutation x, Permutation y, Presentation source);

  const PermGroup& group() const { return group_; }
  const Permutation& x() const { return x_; }
  const Permutation& y() const { return y_; }
  const Presentation& source() const { return source_; }
  std::size_t order() const { return group_.order(); }

 private:
  Permutation x_;
  Permutation y_;
  Presentation source_;
  PermGroup group_;
};

AlgebraicHypermap hypermap_from_presentation(const Presentation& p,
                                             std::size_t max_cosets = kDefaultMaxCosets);

/// One-element group with x = y = 1: type (1,1,1) on the sphere.
AlgebraicHypermap trivial_hypermap();

HypermapType type_of(const AlgebraicHypermap& h);

/// Euler-Poincare genus for a regular hypermap of the given order and type.
/// Throws InvariantViolation when the result is not a nonnegative integer.
Int genus_from_type(Int order, const HypermapType& t);
Int genus_of(const AlgebraicHypermap& h);

struct CoveringReport {
  bool covering = false;
  bool smooth_v = false;
  bool smooth_e = false;
  bool smooth_f = false;
  std::size_t kernel_order = 0;
};

/// Whether h1 covers h2, i.e. x1 -> x2, y1 -> y2 extends to an epimorphism.
CoveringReport covering_report(const AlgebraicHypermap& h1, const AlgebraicHypermap& h2);

/// x1 -> x2, y1 -> y2 extends to an isomorphism.
bool hypermaps_isomorphic(const AlgebraicHypermap& h1, const AlgebraicHypermap& h2);

/// Underlying bipartite multigraph of the Walsh map. Black vertices are the
/// cosets g<x>, white vertices the cosets g<y>, and adjacency[i][j] counts the
/// brins shared by black i and white j.
struct WalshFingerprint {
  Int black_count = 0;
  Int white_count = 0;
  Int degree_black = 0;
  Int degree_white = 0;
  std::vector<Int> multiplicities;  // sorted, nonzero entries of adjacency
  std::vector<std::vector<Int>> adjacency;

  Int simple_edge_count() const { return static_cast<Int>(multiplicities.size()); }
  Int max_multiplicity() const;
  /// black_count, white_count, degree_black, degree_white, simple edges, max multiplicity
  std::vector<Int> summary() const;
};

WalshFingerprint walsh_fingerprint(const AlgebraicHypermap& h);

/// Builds a fingerprint from a multiplicity matrix (rows black, columns white).
/// Degrees are read from the first row and column.
WalshFingerprint fingerprint_from_adjacency(std::vector<std::vector<Int>> adjacency);

/// Reference graphs: the 2k-cycle with every edge of multiplicity `mult`,
/// the complete bipartite graph K_{a,b}, and the dim-dimensional hypercube
/// coloured by parity.
WalshFingerprint cycle_graph(Int k, Int mult);
WalshFingerprint complete_bipartite(Int a, Int b);
WalshFingerprint hypercube_graph(int dim);

inline constexpr Int kGraphIsoLimit = 16;

enum class GraphIsoResult { isomorphic, not_isomorphic, unverified_fingerprint_match };

const char* to_string(GraphIsoResult r);

/// Exact bipartite multigraph isomorphism (colour classes may be swapped) by
/// backtracking when both sides have at most kGraphIsoLimit vertices per
/// colour; otherwise only the summary data are compared.
GraphIsoResult bipartite_isomorphic(const WalshFingerprint& a, const WalshFingerprint& b);

}  // namespace qcover
