#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qcover/perm_group.hpp"

namespace qcover {

/// Parameters of the two-generator metacyclic p-groups
///   <u, v | u^(p^(a+c)) = v^(p^(b+c)) = 1, u^(p^a) = v^(p^b),
///           u^v = u^(1+p^(a+d)), v^u = v^(1-p^(b+d))>
/// subject to 0 <= d <= c <= a+d <= b+d. Generator 0 is u, generator 1 is v.
struct MetacyclicParams {
  Int p = 2;
  Int a = 0, b = 0, c = 0, d = 0;

  bool chain_holds() const { return 0 <= d && d <= c && c <= a + d && a + d <= b + d; }
  std::string to_string() const;
  friend auto operator<=>(const MetacyclicParams&, const MetacyclicParams&) = default;
};

Presentation metacyclic_presentation(const MetacyclicParams& mp);

struct MetacyclicReport {
  MetacyclicParams params;
  std::size_t order = 0;
  std::size_t expected_order = 0;           // p^(a+b+c)
  std::size_t derived_order = 0;
  std::size_t expected_derived_order = 0;   // p^(c-d)
  bool derived_cyclic_on_power = false;     // G' = <u^(p^(a+d))>
  std::vector<Int> abelianization;          // invariant factors from the relator matrix
  std::vector<Int> expected_abelianization; // factors of Z_{p^a} x Z_{p^(b+d)}
  bool abelianization_order_consistent = false;  // |G| / |G'| equals the factor product
  std::optional<int> nilpotency_class;

  /// |G|, |G'|, then the abelianization invariant factors.
  std::vector<Int> invariant_vector() const;
  bool matches() const;
};

/// Builds the group by coset enumeration and computes its invariants. Throws
/// InvalidArgument when the parameter chain fails.
MetacyclicReport metacyclic_group(const MetacyclicParams& mp, std::size_t max_cosets = kDefaultMaxCosets);

/// Regular representation of the group, for isomorphism tests.
RegularRepresentation metacyclic_regular(const MetacyclicParams& mp, std::size_t max_cosets = kDefaultMaxCosets);

/// Every tuple with the given primes and a, b, c, d <= max_exponent that
/// satisfies the chain.
std::vector<MetacyclicParams> metacyclic_grid(const std::vector<Int>& primes, Int max_exponent);

/// Invariant factors (entries >= 2) of the abelianization, read from the
/// exponent-sum matrix of the relators (one row per relator).
std::vector<Int> abelianization_factors(const Presentation& p);

}  // namespace qcover
