#include "qcover/hypermap.hpp"

#include <algorithm>

#include "qcover/errors.hpp"

namespace qcover {

std::string HypermapType::to_string() const {
  return "(" + std::to_string(ox) + "," + std::to_string(oy) + "," + std::to_string(oxy) + ")";
}

AlgebraicHypermap::AlgebraicHypermap(Permutation x, Permutation y, Presentation source)
    : x_(std::move(x)),
      y_(std::move(y)),
      source_(std::move(source)),
      group_(x_.degree(), std::vector<Permutation>{x_, y_},
             std::max(kDefaultElementCap, x_.degree())) {
  if (source_.num_gens() != 2) throw InvalidArgument("a hypermap presentation has two generators");
  if (!group_.is_regular()) throw InvalidArgument("<x, y> does not act regularly");
}

AlgebraicHypermap hypermap_from_presentation(const Presentation& p, std::size_t max_cosets) {
  if (p.num_gens() != 2) throw InvalidArgument("a hypermap presentation has two generators");
  const CosetTable t = todd_coxeter(p, {}, max_cosets);
  return AlgebraicHypermap(t.generator_permutation(0), t.generator_permutation(1), p);
}

AlgebraicHypermap trivial_hypermap() {
  return AlgebraicHypermap(Permutation(1), Permutation(1),
                           Presentation(2, {Word::generator(0), Word::generator(1)}));
}

HypermapType type_of(const AlgebraicHypermap& h) {
  return HypermapType{h.x().order(), h.y().order(), (h.x() * h.y()).order()};
}

Int genus_from_type(Int order, const HypermapType& t) {
  if (order % t.ox != 0 || order % t.oy != 0 || order % t.oxy != 0)
    throw InvariantViolation("generator orders do not divide the group order");
  // 2 - 2g = N/ox + N/oy + N/oxy - N
  const Int twice = 2 + order - order / t.ox - order / t.oy - order / t.oxy;
  if (twice < 0 || twice % 2 != 0)
    throw InvariantViolation("Euler-Poincare formula gives a non-integral or negative genus for order " +
                             std::to_string(order) + " and type " + t.to_string());
  return twice / 2;
}

Int genus_of(const AlgebraicHypermap& h) {
  return genus_from_type(static_cast<Int>(h.order()), type_of(h));
}

CoveringReport covering_report(const AlgebraicHypermap& h1, const AlgebraicHypermap& h2) {
  CoveringReport out;
  const Permutation images[2] = {h2.x(), h2.y()};
  const MorphismResult r = extends_to_morphism(h1.source(), images, h2.group(), h1.order());
  if (r.kind == MorphismKind::not_hom || r.kind == MorphismKind::hom_onto_subgroup) return out;
  out.covering = true;
  out.kernel_order = h1.order() / h2.order();
  const HypermapType t1 = type_of(h1);
  const HypermapType t2 = type_of(h2);
  out.smooth_v = t1.ox == t2.ox;
  out.smooth_e = t1.oy == t2.oy;
  out.smooth_f = t1.oxy == t2.oxy;
  return out;
}

bool hypermaps_isomorphic(const AlgebraicHypermap& h1, const AlgebraicHypermap& h2) {
  if (h1.order() != h2.order()) return false;
  const Permutation images[2] = {h2.x(), h2.y()};
  return extends_to_morphism(h1.source(), images, h2.group(), h1.order()).kind ==
         MorphismKind::automorphism;
}

// ---------------------------------------------------------------- Walsh graphs

Int WalshFingerprint::max_multiplicity() const {
  return multiplicities.empty() ? 0 : multiplicities.back();
}

std::vector<Int> WalshFingerprint::summary() const {
  return {black_count, white_count, degree_black, degree_white, simple_edge_count(), max_multiplicity()};
}

WalshFingerprint fingerprint_from_adjacency(std::vector<std::vector<Int>> adjacency) {
  WalshFingerprint f;
  f.black_count = static_cast<Int>(adjacency.size());
  f.white_count = adjacency.empty() ? 0 : static_cast<Int>(adjacency[0].size());
  for (const auto& row : adjacency) {
    if (static_cast<Int>(row.size()) != f.white_count) throw InvalidArgument("ragged adjacency matrix");
    for (Int m : row)
      if (m != 0) f.multiplicities.push_back(m);
  }
  std::sort(f.multiplicities.begin(), f.multiplicities.end());
  if (f.black_count > 0) {
    for (Int m : adjacency[0]) f.degree_black += m;
    for (const auto& row : adjacency) f.degree_white += row[0];
  }
  f.adjacency = std::move(adjacency);
  return f;
}

WalshFingerprint walsh_fingerprint(const AlgebraicHypermap& h) {
  const std::size_t n = h.order();
  std::vector<Int> black_of(n), white_of(n);
  const auto xc = h.x().cycles();
  const auto yc = h.y().cycles();
  for (std::size_t i = 0; i < xc.size(); ++i)
    for (Point p : xc[i]) black_of[p] = static_cast<Int>(i);
  for (std::size_t j = 0; j < yc.size(); ++j)
    for (Point p : yc[j]) white_of[p] = static_cast<Int>(j);
  std::vector<std::vector<Int>> adj(xc.size(), std::vector<Int>(yc.size(), 0));
  for (std::size_t p = 0; p < n; ++p) ++adj[static_cast<std::size_t>(black_of[p])][static_cast<std::size_t>(white_of[p])];
  return fingerprint_from_adjacency(std::move(adj));
}

WalshFingerprint cycle_graph(Int k, Int mult) {
  if (k < 2) throw InvalidArgument("cycle_graph needs k >= 2");
  std::vector<std::vector<Int>> adj(static_cast<std::size_t>(k), std::vector<Int>(static_cast<std::size_t>(k), 0));
  for (Int i = 0; i < k; ++i) {
    adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = mult;
    adj[static_cast<std::size_t>(i)][static_cast<std::size_t>((i + 1) % k)] = mult;
  }
  return fingerprint_from_adjacency(std::move(adj));
}

WalshFingerprint complete_bipartite(Int a, Int b) {
  return fingerprint_from_adjacency(
      std::vector<std::vector<Int>>(static_cast<std::size_t>(a), std::vector<Int>(static_cast<std::size_t>(b), 1)));
}

WalshFingerprint hypercube_graph(int dim) {
  std::vector<unsigned> even, odd;
  for (unsigned v = 0; v < (1u << dim); ++v) (__builtin_popcount(v) % 2 == 0 ? even : odd).push_back(v);
  std::vector<std::vector<Int>> adj(even.size(), std::vector<Int>(odd.size(), 0));
  for (std::size_t i = 0; i < even.size(); ++i)
    for (std::size_t j = 0; j < odd.size(); ++j)
      adj[i][j] = __builtin_popcount(even[i] ^ odd[j]) == 1 ? 1 : 0;
  return fingerprint_from_adjacency(std::move(adj));
}

const char* to_string(GraphIsoResult r) {
  switch (r) {
    case GraphIsoResult::isomorphic: return "isomorphic";
    case GraphIsoResult::not_isomorphic: return "not_isomorphic";
    case GraphIsoResult::unverified_fingerprint_match: return "fingerprint match, isomorphism unverified";
  }
  return "?";
}

namespace {

using Matrix = std::vector<std::vector<Int>>;

Matrix transpose(const Matrix& m) {
  if (m.empty()) return {};
  Matrix t(m[0].size(), std::vector<Int>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

// Searches for a row bijection sigma such that, after rows of b are
// reordered by sigma, the columns of a and b agree as multisets. Partial
// assignments are pruned by comparing multisets of column prefixes.
class RowMatcher {
 public:
  RowMatcher(const Matrix& a, const Matrix& b) : a_(a), b_(b), used_(b.size(), false) {
    for (const auto& r : a_) row_sig_a_.push_back(sorted(r));
    for (const auto& r : b_) row_sig_b_.push_back(sorted(r));
  }

  bool run() { return extend(0); }

 private:
  static std::vector<Int> sorted(std::vector<Int> v) {
    std::sort(v.begin(), v.end());
    return v;
  }

  bool prefixes_match(std::size_t depth) const {
    const std::size_t cols = a_.empty() ? 0 : a_[0].size();
    std::vector<std::vector<Int>> ca(cols), cb(cols);
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t i = 0; i < depth; ++i) {
        ca[j].push_back(a_[i][j]);
        cb[j].push_back(b_[sigma_[i]][j]);
      }
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    return ca == cb;
  }

  bool extend(std::size_t depth) {
    if (depth == a_.size()) return true;
    for (std::size_t r = 0; r < b_.size(); ++r) {
      if (used_[r] || row_sig_a_[depth] != row_sig_b_[r]) continue;
      used_[r] = true;
      sigma_.push_back(r);
      if (prefixes_match(depth + 1) && extend(depth + 1)) return true;
      sigma_.pop_back();
      used_[r] = false;
    }
    return false;
  }

  const Matrix& a_;
  const Matrix& b_;
  std::vector<bool> used_;
  std::vector<std::size_t> sigma_;
  std::vector<std::vector<Int>> row_sig_a_, row_sig_b_;
};

bool same_shape(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  return a[0].size() == b[0].size();
}

bool coloured_isomorphic(const Matrix& a, const Matrix& b) {
  return same_shape(a, b) && RowMatcher(a, b).run();
}

}  // namespace

GraphIsoResult bipartite_isomorphic(const WalshFingerprint& a, const WalshFingerprint& b) {
  const bool small = std::max(a.black_count, a.white_count) <= kGraphIsoLimit &&
                     std::max(b.black_count, b.white_count) <= kGraphIsoLimit;
  if (!small) {
    auto key = [](const WalshFingerprint& f, bool swap) {
      std::vector<Int> s = f.summary();
      if (swap) {
        std::swap(s[0], s[1]);
        std::swap(s[2], s[3]);
      }
      s.insert(s.end(), f.multiplicities.begin(), f.multiplicities.end());
      return s;
    };
    return key(a, false) == key(b, false) || key(a, false) == key(b, true)
               ? GraphIsoResult::unverified_fingerprint_match
               : GraphIsoResult::not_isomorphic;
  }
  if (a.multiplicities != b.multiplicities) return GraphIsoResult::not_isomorphic;
  if (coloured_isomorphic(a.adjacency, b.adjacency) ||
      coloured_isomorphic(a.adjacency, transpose(b.adjacency)))
    return GraphIsoResult::isomorphic;
  return GraphIsoResult::not_isomorphic;
}

}  // namespace qcover
