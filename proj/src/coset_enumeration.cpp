#include "qcover/coset_enumeration.hpp"

#include <cstdlib>
#include <string>

#include "qcover/errors.hpp"

namespace qcover {

namespace {

using Coset = std::int32_t;
constexpr Coset kUndefined = -1;

int column_of(Letter l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; }

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t max_cosets)
      : ncols_(2 * p.num_gens()), max_cosets_(max_cosets) {
    for (const Word& r : p.relators()) {
      if (r.empty()) continue;
      std::vector<int> cols;
      cols.reserve(r.size());
      for (Letter l : r.letters()) cols.push_back(column_of(l));
      room_per_coset_ += cols.size();
      relators_.push_back(std::move(cols));
    }
    room_per_coset_ += static_cast<std::size_t>(ncols_);
    table_.reserve(1024 * static_cast<std::size_t>(ncols_));
    new_coset();
  }

  CosetTable run(std::span<const Word> subgroup_gens) {
    for (const Word& w : subgroup_gens) {
      if (w.empty()) continue;
      std::vector<int> cols;
      for (Letter l : w.letters()) cols.push_back(column_of(l));
      if (cols.size() + 1 > max_cosets_ - size()) make_room(cols.size() + 1, nullptr);
      scan(0, cols, true);
    }

    for (Coset c = 0; static_cast<std::size_t>(c) < size(); ++c) {
      if (!live(c)) continue;
      if (size() + room_per_coset_ > max_cosets_) {
        make_room(room_per_coset_, &c);
        continue;
      }
      for (const auto& r : relators_) {
        scan(c, r, true);
        if (!live(c)) break;
      }
      if (!live(c)) continue;
      for (int x = 0; x < ncols_; ++x)
        if (at(c, x) == kUndefined) define(c, x);
    }
    return standardize();
  }

 private:
  std::size_t size() const { return parent_.size(); }
  bool live(Coset c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  Coset& at(Coset c, int x) { return table_[static_cast<std::size_t>(c) * ncols_ + x]; }

  Coset new_coset() {
    const auto c = static_cast<Coset>(size());
    parent_.push_back(c);
    table_.insert(table_.end(), static_cast<std::size_t>(ncols_), kUndefined);
    ++live_count_;
    return c;
  }

  void define(Coset c, int x) {
    const Coset d = new_coset();
    at(c, x) = d;
    at(d, x ^ 1) = c;
  }

  Coset rep(Coset c) {
    Coset r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const Coset next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(Coset k, Coset l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[static_cast<std::size_t>(l)] = k;
    queue_.push_back(l);
    --live_count_;
  }

  void coincidence(Coset a, Coset b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const Coset e = queue_[i];
      for (int x = 0; x < ncols_; ++x) {
        const Coset f = at(e, x);
        if (f == kUndefined) continue;
        if (at(f, x ^ 1) == e) at(f, x ^ 1) = kUndefined;
        const Coset e1 = rep(e);
        const Coset f1 = rep(f);
        if (at(e1, x) != kUndefined) {
          merge(f1, at(e1, x));
        } else if (at(f1, x ^ 1) != kUndefined) {
          merge(e1, at(f1, x ^ 1));
        } else {
          at(e1, x) = f1;
          at(f1, x ^ 1) = e1;
        }
      }
    }
  }

  // Traces `w` from `a` forwards and backwards. With `fill`, gaps are closed
  // by defining new cosets; without it only deductions and coincidences are
  // recorded (lookahead).
  void scan(Coset a, const std::vector<int>& w, bool fill) {
    Coset f = a;
    Coset b = a;
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[static_cast<std::size_t>(i)]) != kUndefined) {
        f = at(f, w[static_cast<std::size_t>(i)]);
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, w[static_cast<std::size_t>(j)] ^ 1) != kUndefined) {
        b = at(b, w[static_cast<std::size_t>(j)] ^ 1);
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        const int x = w[static_cast<std::size_t>(i)];
        at(f, x) = b;
        at(b, x ^ 1) = f;
        return;
      }
      if (!fill) return;
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  // Lookahead over all live cosets, then compaction. `cursor` (if given) is
  // remapped to the first live coset at or after its old position.
  void make_room(std::size_t needed, Coset* cursor) {
    for (Coset c = 0; static_cast<std::size_t>(c) < size(); ++c) {
      for (const auto& r : relators_) {
        if (!live(c)) break;
        scan(c, r, false);
      }
    }
    compact(cursor);
    if (size() + needed > max_cosets_)
      throw ResourceError("coset enumeration exceeded the limit of " + std::to_string(max_cosets_) +
                          " cosets");
  }

  void compact(Coset* cursor) {
    std::vector<Coset> renum(size(), kUndefined);
    Coset next = 0;
    for (Coset c = 0; static_cast<std::size_t>(c) < size(); ++c)
      if (live(c)) renum[static_cast<std::size_t>(c)] = next++;
    if (cursor) {
      Coset c = *cursor;
      while (static_cast<std::size_t>(c) < size() && !live(c)) ++c;
      // The main loop increments after processing; step back one so the
      // first live coset at or after the old cursor is processed next.
      *cursor = (static_cast<std::size_t>(c) < size() ? renum[static_cast<std::size_t>(c)] : next) - 1;
    }
    std::vector<Coset> table;
    table.reserve(static_cast<std::size_t>(next) * ncols_);
    for (Coset c = 0; static_cast<std::size_t>(c) < size(); ++c) {
      if (!live(c)) continue;
      for (int x = 0; x < ncols_; ++x) {
        const Coset v = at(c, x);
        table.push_back(v == kUndefined ? kUndefined : renum[static_cast<std::size_t>(v)]);
      }
    }
    table_ = std::move(table);
    parent_.resize(static_cast<std::size_t>(next));
    for (Coset c = 0; c < next; ++c) parent_[static_cast<std::size_t>(c)] = c;
    live_count_ = static_cast<std::size_t>(next);
  }

  CosetTable standardize() {
    std::vector<Coset> renum(size(), kUndefined);
    std::vector<Coset> order;
    order.reserve(live_count_);
    renum[0] = 0;
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int x = 0; x < ncols_; ++x) {
        const Coset v = at(order[i], x);
        if (v == kUndefined || !live(v))
          throw InvariantViolation("coset table incomplete after enumeration");
        if (renum[static_cast<std::size_t>(v)] == kUndefined) {
          renum[static_cast<std::size_t>(v)] = static_cast<Coset>(order.size());
          order.push_back(v);
        }
      }
    }
    std::vector<std::int32_t> entries;
    entries.reserve(order.size() * static_cast<std::size_t>(ncols_));
    for (Coset c : order)
      for (int x = 0; x < ncols_; ++x) entries.push_back(renum[static_cast<std::size_t>(at(c, x))]);
    return CosetTable(ncols_ / 2, order.size(), std::move(entries));
  }

  int ncols_;
  std::size_t max_cosets_;
  std::size_t room_per_coset_ = 0;
  std::size_t live_count_ = 0;
  std::vector<std::vector<int>> relators_;
  std::vector<Coset> table_;
  std::vector<Coset> parent_;
  std::vector<Coset> queue_;
};

}  // namespace

CosetTable::CosetTable(int num_gens, std::size_t num_cosets, std::vector<std::int32_t> entries)
    : num_gens_(num_gens), num_cosets_(num_cosets), entries_(std::move(entries)) {}

Point CosetTable::act(Point coset, Letter letter) const {
  return static_cast<Point>(entries_[coset * 2 * static_cast<std::size_t>(num_gens_) +
                                     static_cast<std::size_t>(column_of(letter))]);
}

Permutation CosetTable::generator_permutation(int g) const {
  std::vector<Point> img(num_cosets_);
  for (std::size_t c = 0; c < num_cosets_; ++c) img[c] = act(static_cast<Point>(c), g + 1);
  return Permutation(std::move(img));
}

std::vector<Permutation> CosetTable::generator_permutations() const {
  std::vector<Permutation> out;
  for (int g = 0; g < num_gens_; ++g) out.push_back(generator_permutation(g));
  return out;
}

CosetTable todd_coxeter(const Presentation& p, std::span<const Word> subgroup_gens,
                        std::size_t max_cosets) {
  if (max_cosets < 1) throw InvalidArgument("max_cosets must be at least 1");
  for (const Word& w : subgroup_gens)
    if (w.max_generator() >= p.num_gens()) throw InvalidArgument("subgroup generator uses an undeclared generator");
  return Enumerator(p, max_cosets).run(subgroup_gens);
}

}  // namespace qcover
