#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qcover/hypermap.hpp"
#include "qcover/intlattice.hpp"
#include "qcover/operations.hpp"

namespace qcover {

/// Classification coordinates (m, n, d; alpha, beta, gamma, delta, epsilon).
/// Residues are stored in [0, modulus): alpha, beta mod md; gamma, delta mod
/// nd; epsilon mod d. A modulus of 1 leaves the single residue 0.
struct CoveringOctuple {
  Int m = 1, n = 1, d = 1;
  Int alpha = 0, beta = 0, gamma = 0, delta = 0, epsilon = 0;

  /// Reduces the residues; throws InvalidArgument unless m, n, d >= 1.
  static CoveringOctuple make(Int m, Int n, Int d, Int alpha, Int beta, Int gamma, Int delta, Int epsilon);

  Int md() const { return m * d; }
  Int nd() const { return n * d; }
  Int mnd() const { return m * n * d; }

  friend auto operator<=>(const CoveringOctuple&, const CoveringOctuple&) = default;
  std::string to_string() const;
};

struct ConditionDiagnostics {
  bool units = false;  // alpha, beta units mod md; gamma, delta mod nd; epsilon mod d
  bool cond1 = false;  // alpha^2 = beta^2 = 1 mod md
  bool cond2 = false;  // gamma^2 = delta^2 = 1 mod nd
  bool cond3 = false;  // beta = 1 mod m, gamma = 1 mod n
  bool cond4 = false;  // alpha = gamma, beta = delta mod d
  bool cond5 = false;  // ((beta-1)/m) epsilon + (gamma-1)/n = 0 mod d

  bool valid() const { return units && cond1 && cond2 && cond3 && cond4 && cond5; }
  /// Names of the failed condition groups.
  std::vector<std::string> failures() const;
};

ConditionDiagnostics validate_octuple(const CoveringOctuple& o);

/// (alpha+1)(beta-1) = 0 mod md and (delta+1)(gamma-1) = 0 mod nd.
bool lemma_num_check(const CoveringOctuple& o);

/// u = x y^-1 x y and v = y x^-1 y x as words.
Word word_u();
Word word_v();

/// The ten defining relators of the covering group, exponents reduced to a
/// symmetric range.
Presentation covering_presentation(const CoveringOctuple& o);

/// K modeled abstractly as Z^2 / <(md,0), (0,nd), (m,-n epsilon)>, with
/// generator 0 = u and generator 1 = v.
FinAbGroup kernel_model(const CoveringOctuple& o);

struct Covering {
  CoveringOctuple octuple;
  AlgebraicHypermap hypermap;
  Permutation u;
  Permutation v;
  FinAbGroup k_model;
  std::size_t k_order = 0;
  bool k_cyclic = false;
};

/// Builds the covering group by coset enumeration and checks every
/// structural postcondition: |G| = 8mnd; K = <u, v> normal, abelian, of order
/// mnd with o(u) = md, o(v) = nd and |<u> n <v>| = d; G/K = Q8; the power
/// relations for x^4, y^4, (xy)^4; and agreement of the concrete K with the
/// abstract model. Any violation throws InvariantViolation.
Covering build_covering(const CoveringOctuple& o, std::size_t max_cosets = kDefaultMaxCosets);

struct PredictedTypeGenus {
  Int p = 1, q = 1, r = 1;
  HypermapType type;
  Int genus = 0;
};

/// p, q, r as orders in the abstract K; type (4p, 4q, 4r) and genus
/// mnd(4 - 1/p - 1/q - 1/r) + 1 in exact arithmetic.
PredictedTypeGenus predicted_type_genus(const CoveringOctuple& o);

struct SymmetryProfile {
  bool reflexible = false;
  bool symmetric = false;
  bool self_petrie = false;
  bool triply_self_dual = false;
  bool omega1_invariant = false;
  bool completely_self_dual = false;
  bool mho_invariant = false;

  /// Fills the derived flags from the four base flags.
  static SymmetryProfile from_base(bool reflexible, bool symmetric, bool self_petrie, bool triply_self_dual);
  friend bool operator==(const SymmetryProfile&, const SymmetryProfile&) = default;
};

/// From the congruence criteria on the parameters.
SymmetryProfile symmetry_profile_congruence(const CoveringOctuple& o);
/// From invariance under iota, tau, pi and theta in the built group.
SymmetryProfile symmetry_profile_group(const AlgebraicHypermap& h);
SymmetryProfile symmetry_profile_group(const CoveringOctuple& o, std::size_t max_cosets = kDefaultMaxCosets);

struct BranchProfile {
  Int p = 1, q = 1, r = 1;
  bool smooth_v = true, smooth_e = true, smooth_f = true;
};

/// Branching orders from the abstract K. Whenever a smooth flag is set the
/// matching necessary congruences are asserted; a failure throws
/// InvariantViolation.
BranchProfile branch_profile(const CoveringOctuple& o);

/// Valid octuples with m*n*d <= max_mnd, in lexicographic order.
std::vector<CoveringOctuple> valid_octuples(Int max_mnd);
/// Valid octuples for fixed (m, n, d).
std::vector<CoveringOctuple> valid_octuples_for(Int m, Int n, Int d);

struct CensusOptions {
  std::size_t max_cosets = kDefaultMaxCosets;
  unsigned jobs = 1;
};

struct CensusRecord {
  CoveringOctuple octuple;
  std::size_t group_order = 0;  // 0 when construction failed
  HypermapType type;
  Int genus = 0;
  PredictedTypeGenus predicted;
  SymmetryProfile symmetry;        // congruence based
  SymmetryProfile symmetry_group;  // group based
  BranchProfile branch;
  std::vector<Int> k_invariant_factors;
  bool k_cyclic = false;
  WalshFingerprint fingerprint;
  bool lemma_num = false;
  bool consistent = false;
  bool resource_failure = false;  // the coset or element budget ran out
  std::string error;
};

/// Full record for one valid octuple. Construction errors are captured in
/// `error` with consistent = false rather than thrown.
CensusRecord census_record(const CoveringOctuple& o, std::size_t max_cosets = kDefaultMaxCosets);

/// Records for every valid octuple with mnd <= max_mnd, in lexicographic
/// order regardless of the number of worker threads.
std::vector<CensusRecord> enumerate_census(Int max_mnd, const CensusOptions& options = {});

/// Records with p = q = r = 1.
std::vector<CensusRecord> smooth_covers(Int max_mnd, const CensusOptions& options = {});

/// Parameter conditions that every Omega1-invariant octuple must satisfy:
/// m = n, gamma = beta and delta = alpha mod md, and the list of congruences
/// on alpha, beta, epsilon.
bool omega1_family_conditions(const CoveringOctuple& o);

/// Checks on K1(m) = (m,m,1;1,1,1,1,1) and K2(m) = (m,m,3;1,1,1,1,1), and on
/// the Omega1-invariant octuples with m = n = `m` and d <= 8.
std::vector<CheckItem> special_families(Int m, std::size_t max_cosets = kDefaultMaxCosets);

struct NilpotencyAudit {
  bool parts_normal = false;
  std::size_t k_order = 0;
  std::optional<int> nilpotency_class;
  int bound = 0;  // number of cyclic parts
  bool within_bound = false;
  std::string detail;
};

/// K = product of the cyclic subgroups <c_i>; checks each is normal in G and
/// that the class of K is at most the number of parts.
NilpotencyAudit nilpotency_audit(const PermGroup& g, const std::vector<Permutation>& parts);

}  // namespace qcover
