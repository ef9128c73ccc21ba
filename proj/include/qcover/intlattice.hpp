#pragma once

// Exact integer matrices, Smith normal form and finite abelian groups given by
// relation matrices. All arithmetic is checked 64-bit; overflow throws.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qcover {

using Int = std::int64_t;

namespace checked {
Int add(Int a, Int b);
Int sub(Int a, Int b);
Int mul(Int a, Int b);
Int neg(Int a);
}  // namespace checked

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);
/// Representative of `a` in [0, n). Requires n >= 1.
Int mod(Int a, Int n);
/// True iff gcd(a, n) = 1; always true for n = 1.
bool is_unit(Int a, Int n);
/// a ≡ b (mod n).
bool congruent(Int a, Int b, Int n);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  /// Throws InvalidArgument on ragged input.
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Int> row(std::size_t r) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, Int factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, Int factor);
  void negate_row(std::size_t r);

  /// Fraction-free determinant of a square matrix.
  Int determinant() const;
  bool is_diagonal() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// U·A·V = S with U, V unimodular and S diagonal, nonnegative, each
/// diagonal entry dividing the next.
struct SnfResult {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  std::vector<Int> diagonal() const;
  std::size_t rank() const;
};

/// Pivot is the nonzero entry of least absolute value in the trailing block,
/// ties broken by lowest (row, col), so the output is a function of A alone.
SnfResult smith_normal_form(const IntMatrix& a);

/// An element of a FinAbGroup: one residue per invariant factor.
struct AbElement {
  std::vector<Int> coords;
  friend bool operator==(const AbElement&, const AbElement&) = default;
};

/// Z^n modulo the row lattice of a full-rank relation matrix, in invariant
/// factor form Z_{d1} x ... x Z_{dk} with d1 | d2 | ... and every di >= 2.
class FinAbGroup {
 public:
  FinAbGroup() = default;

  const std::vector<Int>& invariant_factors() const { return factors_; }
  std::size_t num_generators() const { return coordinate_map_.size(); }
  Int order() const;
  bool is_cyclic() const { return factors_.size() <= 1; }

  AbElement identity() const;
  /// Image of generator i of the original presentation.
  AbElement generator(std::size_t i) const;
  /// Image of the exponent vector (one exponent per original generator).
  AbElement from_exponents(std::span<const Int> exponents) const;

  AbElement add(const AbElement& a, const AbElement& b) const;
  AbElement scale(const AbElement& a, Int k) const;
  bool is_identity(const AbElement& a) const;

  friend FinAbGroup abgroup_from_relations(std::size_t num_gens,
                                           const std::vector<std::vector<Int>>& relations);

 private:
  AbElement reduce(std::vector<Int> coords) const;

  std::vector<Int> factors_;
  // coordinate_map_[i] = canonical coordinates of original generator i
  std::vector<std::vector<Int>> coordinate_map_;
};

/// Throws InvalidArgument naming the free rank when the quotient is infinite.
FinAbGroup abgroup_from_relations(std::size_t num_gens,
                                  const std::vector<std::vector<Int>>& relations);

/// Least k >= 1 with k·g = 0.
Int element_order(const FinAbGroup& group, const AbElement& g);

}  // namespace qcover
