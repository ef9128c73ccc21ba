#include "qcover/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "qcover/errors.hpp"

namespace qcover {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter l : letters_)
    if (l == 0) throw InvalidArgument("letter 0 is not a generator");
}

Word Word::generator(int g) { return Word({g + 1}); }

int Word::max_generator() const {
  int m = -1;
  for (Letter l : letters_) m = std::max(m, std::abs(l) - 1);
  return m;
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out) l = -l;
  return Word(std::move(out));
}

Word Word::reduced() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (Letter l : letters_) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

Word Word::pow(Int k) const {
  const Word base = k < 0 ? inverse() : *this;
  const Int n = k < 0 ? -k : k;
  std::vector<Letter> out;
  out.reserve(base.size() * static_cast<std::size_t>(n));
  for (Int i = 0; i < n; ++i) out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return Word(std::move(out));
}

std::vector<Int> Word::exponent_sums(int num_gens) const {
  std::vector<Int> sums(static_cast<std::size_t>(num_gens), 0);
  for (Letter l : letters_) {
    const int g = std::abs(l) - 1;
    if (g >= num_gens) throw InvalidArgument("word uses a generator outside the alphabet");
    sums[static_cast<std::size_t>(g)] += l > 0 ? 1 : -1;
  }
  return sums;
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

Word commutator(const Word& a, const Word& b) { return a.inverse() * b.inverse() * a * b; }

Word conjugate(const Word& a, const Word& b) { return b.inverse() * a * b; }

Word substitute(const Word& w, const std::vector<Word>& images) {
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    const auto g = static_cast<std::size_t>(std::abs(l) - 1);
    if (g >= images.size()) throw InvalidArgument("substitution has no image for a generator");
    const Word piece = l > 0 ? images[g] : images[g].inverse();
    out.insert(out.end(), piece.letters().begin(), piece.letters().end());
  }
  return Word(std::move(out));
}

Presentation::Presentation(int num_gens, std::vector<Word> relators)
    : num_gens_(num_gens), relators_(std::move(relators)) {
  if (num_gens < 0) throw InvalidArgument("negative generator count");
  for (const Word& r : relators_)
    if (r.max_generator() >= num_gens)
      throw InvalidArgument("relator uses an undeclared generator");
}

// ---------------------------------------------------------------- parsing

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  std::vector<Word> parse_list() {
    std::vector<Word> out;
    skip_space();
    if (at_end()) return out;
    out.push_back(parse_word());
    while (peek() == ',') {
      ++pos_;
      out.push_back(parse_word());
    }
    skip_space();
    if (!at_end()) fail("unexpected character");
    return out;
  }

  Word parse_single() {
    Word w = parse_word();
    skip_space();
    if (!at_end()) fail("unexpected character");
    return w;
  }

 private:
  Word parse_word() {
    std::vector<Letter> letters;
    skip_space();
    bool any = false;
    while (!at_end() && peek() != ',' && peek() != ')') {
      Word f = parse_factor();
      letters.insert(letters.end(), f.letters().begin(), f.letters().end());
      any = true;
      skip_space();
    }
    if (!any) fail("empty word");
    return Word(std::move(letters));
  }

  Word parse_factor() {
    Word atom;
    const char c = peek();
    switch (c) {
      case 'x': atom = Word({1}); ++pos_; break;
      case 'y': atom = Word({2}); ++pos_; break;
      case 'X': atom = Word({-1}); ++pos_; break;
      case 'Y': atom = Word({-2}); ++pos_; break;
      case '(': {
        ++pos_;
        atom = parse_word();
        skip_space();
        if (peek() != ')') fail("expected ')'");
        ++pos_;
        break;
      }
      default: fail("expected a generator or '('");
    }
    skip_space();
    if (peek() == '-' || std::isdigit(static_cast<unsigned char>(peek()))) return atom.pow(parse_power());
    return atom;
  }

  Int parse_power() {
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    Int v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = checked::add(checked::mul(v, 10), peek() - '0');
      ++pos_;
    }
    return negative ? -v : v;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const char* what) const {
    throw InvalidArgument(std::string("word syntax error at offset ") + std::to_string(pos_) +
                          ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text) { return WordParser(text).parse_single(); }

Presentation parse_presentation(std::string_view text) {
  return Presentation(2, WordParser(text).parse_list());
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const Letter l = ls[i];
    if (std::abs(l) > 2) throw InvalidArgument("format_word supports two generators only");
    const char base = std::abs(l) == 1 ? 'x' : 'y';
    out += l > 0 ? base : static_cast<char>(std::toupper(base));
    if (j - i > 1) out += std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string format_presentation(const Presentation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    if (i) out += ", ";
    out += format_word(p.relators()[i]);
  }
  return out;
}

}  // namespace qcover
