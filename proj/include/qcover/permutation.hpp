#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qcover/intlattice.hpp"
#include "qcover/word.hpp"

namespace qcover {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1}. Products compose left to right:
/// (p * q)[i] = q[p[i]], matching the right action of coset tables.
class Permutation {
 public:
  Permutation() = default;
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);
  /// Throws InvalidArgument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(Int k) const;
  bool is_identity() const;
  /// lcm of the cycle lengths.
  Int order() const;
  std::vector<std::vector<Point>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// a^-1 b^-1 a b
Permutation commutator(const Permutation& a, const Permutation& b);
/// b^-1 a b
Permutation conjugate(const Permutation& a, const Permutation& b);

/// Product of generator images along `w`; the empty word gives the identity
/// of `degree`.
Permutation evaluate_word(const Word& w, std::span<const Permutation> gen_images, std::size_t degree);

/// Image of a single point under the permutation `w` evaluates to.
Point trace_word(Point start, const Word& w, std::span<const Permutation> gen_images);
/// Same, with precomputed inverse images.
Point trace_word(Point start, const Word& w, std::span<const Permutation> gen_images,
                 std::span<const Permutation> gen_inverses);

}  // namespace qcover
