#include "qcover/permutation.hpp"

#include <cstdlib>

#include "qcover/errors.hpp"

namespace qcover {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  for (std::size_t i = 0; i < degree; ++i) images_[i] = static_cast<Point>(i);
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) throw InvalidArgument("images do not form a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw InvalidArgument("permutation degree mismatch");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

Permutation Permutation::pow(Int k) const {
  Permutation base = k < 0 ? inverse() : *this;
  Int n = k < 0 ? -k : k;
  Permutation acc(degree());
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Int Permutation::order() const {
  Int o = 1;
  for (const auto& c : cycles()) o = lcm(o, static_cast<Int>(c.size()));
  return o;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point s = 0; s < images_.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Point> cyc;
    for (Point p = s; !seen[p]; p = images_[p]) {
      seen[p] = true;
      cyc.push_back(p);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

Permutation conjugate(const Permutation& a, const Permutation& b) { return b.inverse() * a * b; }

Permutation evaluate_word(const Word& w, std::span<const Permutation> gen_images, std::size_t degree) {
  for (const auto& g : gen_images)
    if (g.degree() != degree) throw InvalidArgument("generator images differ in degree");
  std::vector<Permutation> inverses;
  inverses.reserve(gen_images.size());
  for (const auto& g : gen_images) inverses.push_back(g.inverse());

  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  for (Letter l : w.letters()) {
    const auto g = static_cast<std::size_t>(std::abs(l) - 1);
    if (g >= gen_images.size()) throw InvalidArgument("word letter outside the image list");
    const Permutation& p = l > 0 ? gen_images[g] : inverses[g];
    for (auto& v : img) v = p[v];
  }
  return Permutation(std::move(img));
}

Point trace_word(Point start, const Word& w, std::span<const Permutation> gen_images) {
  // Inverse letters walk the cycle backwards; fine for the short words and
  // small orders used here, and avoids materializing inverses.
  Point p = start;
  for (Letter l : w.letters()) {
    const auto g = static_cast<std::size_t>(std::abs(l) - 1);
    if (g >= gen_images.size()) throw InvalidArgument("word letter outside the image list");
    const Permutation& perm = gen_images[g];
    if (l > 0) {
      p = perm[p];
    } else {
      Point q = p;
      while (perm[q] != p) q = perm[q];
      p = q;
    }
  }
  return p;
}

Point trace_word(Point start, const Word& w, std::span<const Permutation> gen_images,
                 std::span<const Permutation> gen_inverses) {
  Point p = start;
  for (Letter l : w.letters()) {
    const auto g = static_cast<std::size_t>(std::abs(l) - 1);
    if (g >= gen_images.size()) throw InvalidArgument("word letter outside the image list");
    p = l > 0 ? gen_images[g][p] : gen_inverses[g][p];
  }
  return p;
}

}  // namespace qcover
