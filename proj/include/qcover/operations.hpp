#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qcover/hypermap.hpp"
#include "qcover/report.hpp"

namespace qcover {

/// Row-major 2x2 integer matrix [[a, b], [c, d]].
struct Mat2Z {
  Int a = 1, b = 0, c = 0, d = 1;

  static Mat2Z identity() { return {}; }
  Int det() const;
  /// Exact inverse; requires det = +-1.
  Mat2Z inverse() const;
  Mat2Z operator-() const { return {-a, -b, -c, -d}; }
  friend Mat2Z operator*(const Mat2Z& l, const Mat2Z& r);
  friend bool operator==(const Mat2Z&, const Mat2Z&) = default;
  friend auto operator<=>(const Mat2Z&, const Mat2Z&) = default;
  std::string to_string() const;
};

/// An automorphism of the free group on x, y given by generator images,
/// together with the images defining its inverse.
struct GenSubstitution {
  std::string name;
  Word image_x;
  Word image_y;
  Word inverse_x;
  Word inverse_y;

  /// Substitution with the roles of images and inverse images exchanged.
  GenSubstitution inverse() const;
};

/// tau, pi, pi1, iota, varsigma, theta, zeta, eta.
const std::vector<GenSubstitution>& builtin_operations();
/// Lookup by catalog name; throws InvalidArgument for unknown names.
const GenSubstitution& builtin_operation(std::string_view name);
GenSubstitution identity_substitution();

/// "Apply s1, then s2". The new x is s2's image_x evaluated at s1's images.
GenSubstitution compose(const GenSubstitution& s1, const GenSubstitution& s2);

/// Abelianized action on Z^2: row i holds the exponent sums of the i-th image
/// word. Throws InvalidArgument unless det = +-1.
Mat2Z abelianize(const GenSubstitution& s);

/// Same group, generators replaced by the evaluated image words. The source
/// presentation is rewritten through the inverse substitution so that it
/// presents the group on the new generators.
AlgebraicHypermap apply_operation(const AlgebraicHypermap& h, const GenSubstitution& s);

/// x -> image_x(x, y), y -> image_y(x, y) extends to an automorphism of G.
bool is_invariant(const AlgebraicHypermap& h, const GenSubstitution& s);

struct OpGroupReport {
  std::vector<Mat2Z> elements;  // sorted
  std::size_t order = 0;
  std::string structure_label;  // "cyclic n", "V4", "Sym(3)", "dihedral 2n", or "order n"
};

/// Closure of `gens` under multiplication. Throws ResourceError past `cap`
/// elements (the generated subgroup of GL(2,Z) is then likely infinite).
OpGroupReport matrix_group_closure(const std::vector<Mat2Z>& gens, std::size_t cap = 1000);

/// Structure label from order, commutativity and element orders.
std::string structure_label(const std::vector<Mat2Z>& elements);

/// Finite operation subgroups, the containments among them, and the matrix
/// identities D = S^2, S^-1 T S = T D, S^-1 P S = (TDT)^-1 P (TDT).
std::vector<CheckItem> verify_hasse();

}  // namespace qcover
