#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qcover/intlattice.hpp"

namespace qcover {

/// Signed generator index: +k is generator k-1, -k its inverse.
using Letter = int;

/// A word in the free group. Letters are stored as written; reduction is
/// explicit.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  /// Generator with 0-based index `g`.
  static Word generator(int g);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  /// Largest 0-based generator index used, or -1 for the empty word.
  int max_generator() const;

  Word inverse() const;
  /// Free reduction: cancels adjacent inverse pairs until none remain.
  Word reduced() const;
  /// k-th power; negative k uses the inverse.
  Word pow(Int k) const;
  /// Exponent sum of each generator, length `num_gens`.
  std::vector<Int> exponent_sums(int num_gens) const;

  Word operator*(const Word& rhs) const;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// a^-1 b^-1 a b
Word commutator(const Word& a, const Word& b);
/// b^-1 a b
Word conjugate(const Word& a, const Word& b);

/// Replaces every generator g_i in `w` by images[i] (inverses by inverse images).
Word substitute(const Word& w, const std::vector<Word>& images);

class Presentation {
 public:
  Presentation(int num_gens, std::vector<Word> relators);

  int num_gens() const { return num_gens_; }
  const std::vector<Word>& relators() const { return relators_; }

 private:
  int num_gens_;
  std::vector<Word> relators_;
};

// Text form for two-generator words. Grammar (whitespace ignored):
//
//   list   := word ("," word)*
//   word   := factor+
//   factor := atom [power]
//   atom   := "x" | "y" | "X" | "Y" | "(" word ")"
//   power  := ["-"] digit+
//
// Uppercase letters are inverses, so "XyXy" is x^-1 y x^-1 y and "(xy)4" is
// (xy)^4. A power of 0 yields the empty word.

Word parse_word(std::string_view text);
/// Two-generator presentation from a relator list.
Presentation parse_presentation(std::string_view text);
/// Inverse of parse_word for two-generator words; runs are written with a
/// power, e.g. "x4Y2". The empty word is written "1".
std::string format_word(const Word& w);
std::string format_presentation(const Presentation& p);

}  // namespace qcover
