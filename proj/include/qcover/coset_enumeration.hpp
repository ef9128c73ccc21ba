#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qcover/permutation.hpp"
#include "qcover/word.hpp"

namespace qcover {

inline constexpr std::size_t kDefaultMaxCosets = 100000;

/// Complete, standardized coset table: coset 0 is the subgroup, and cosets are
/// numbered in order of first appearance when the table is read row by row.
class CosetTable {
 public:
  CosetTable(int num_gens, std::size_t num_cosets, std::vector<std::int32_t> entries);

  int num_gens() const { return num_gens_; }
  std::size_t num_cosets() const { return num_cosets_; }

  /// Image of `coset` under a signed generator.
  Point act(Point coset, Letter letter) const;
  /// Right action of generator g (0-based) as a permutation of cosets.
  Permutation generator_permutation(int g) const;
  std::vector<Permutation> generator_permutations() const;

 private:
  int num_gens_;
  std::size_t num_cosets_;
  std::vector<std::int32_t> entries_;  // [coset * 2 * num_gens + column]
};

/// Hasselgrove-Leech-Trotter enumeration with a lookahead pass when the
/// coset budget runs out. Throws ResourceError if the budget is exceeded.
CosetTable todd_coxeter(const Presentation& p, std::span<const Word> subgroup_gens,
                        std::size_t max_cosets = kDefaultMaxCosets);

}  // namespace qcover
