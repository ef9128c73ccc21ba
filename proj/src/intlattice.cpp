#include "qcover/intlattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "qcover/errors.hpp"

namespace qcover {

namespace checked {

Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

Int neg(Int a) {
  if (a == std::numeric_limits<Int>::min()) throw OverflowError("integer overflow in negation");
  return -a;
}

}  // namespace checked

Int gcd(Int a, Int b) {
  a = a < 0 ? checked::neg(a) : a;
  b = b < 0 ? checked::neg(b) : b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  Int g = gcd(a, b);
  Int r = checked::mul(a / g, b);
  return r < 0 ? checked::neg(r) : r;
}

Int mod(Int a, Int n) {
  if (n < 1) throw InvalidArgument("modulus must be positive");
  Int r = a % n;
  return r < 0 ? r + n : r;
}

bool is_unit(Int a, Int n) {
  if (n < 1) throw InvalidArgument("modulus must be positive");
  return gcd(mod(a, n), n) == 1;
}

bool congruent(Int a, Int b, Int n) { return mod(checked::sub(a, b), n) == 0; }

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidArgument("ragged relation matrix");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

std::vector<Int> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, Int factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(dst, c) = checked::add((*this)(dst, c), checked::mul(factor, (*this)(src, c)));
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, Int factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, dst) = checked::add((*this)(r, dst), checked::mul(factor, (*this)(r, src)));
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = checked::neg((*this)(r, c));
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = checked::sub(checked::mul(m(i, j), m(k, k)), checked::mul(m(i, k), m(k, j)));
        m(i, j) = num / prev;  // exact by Sylvester's identity
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return checked::mul(sign, m(n - 1, n - 1));
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        out(i, j) = checked::add(out(i, j), checked::mul(aik, b(k, j)));
    }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------- SNF

std::vector<Int> SnfResult::diagonal() const {
  std::vector<Int> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

std::size_t SnfResult::rank() const {
  std::size_t r = 0;
  for (Int v : diagonal()) r += v != 0;
  return r;
}

namespace {

Int abs_checked(Int v) { return v < 0 ? checked::neg(v) : v; }

// Nonzero entry of least absolute value in the block [t.., t..]; lowest
// (row, col) wins ties. Returns false if the block is zero.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Int best = 0;
  for (std::size_t r = t; r < a.rows(); ++r)
    for (std::size_t c = t; c < a.cols(); ++c) {
      const Int v = a(r, c);
      if (v == 0) continue;
      const Int av = abs_checked(v);
      if (!found || av < best) {
        found = true;
        best = av;
        pr = r;
        pc = c;
      }
    }
  return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t steps = std::min(a.rows(), a.cols());

  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(a, t, pr, pc)) break;
    for (;;) {
      a.swap_rows(t, pr);
      u.swap_rows(t, pr);
      a.swap_cols(t, pc);
      v.swap_cols(t, pc);

      const Int p = a(t, t);
      bool clean = true;
      for (std::size_t r = t + 1; r < a.rows(); ++r) {
        if (a(r, t) == 0) continue;
        const Int q = a(r, t) / p;
        a.add_row_multiple(r, t, checked::neg(q));
        u.add_row_multiple(r, t, checked::neg(q));
        clean = clean && a(r, t) == 0;
      }
      for (std::size_t c = t + 1; c < a.cols(); ++c) {
        if (a(t, c) == 0) continue;
        const Int q = a(t, c) / p;
        a.add_col_multiple(c, t, checked::neg(q));
        v.add_col_multiple(c, t, checked::neg(q));
        clean = clean && a(t, c) == 0;
      }
      if (clean) {
        // Divisibility: fold an offending row into the pivot row and retry.
        bool divides = true;
        for (std::size_t r = t + 1; r < a.rows() && divides; ++r)
          for (std::size_t c = t + 1; c < a.cols(); ++c)
            if (a(r, c) % p != 0) {
              a.add_row_multiple(t, r, 1);
              u.add_row_multiple(t, r, 1);
              divides = false;
              break;
            }
        if (divides) break;
      }
      find_pivot(a, t, pr, pc);
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return SnfResult{std::move(u), std::move(a), std::move(v)};
}

// ---------------------------------------------------------------- FinAbGroup

Int FinAbGroup::order() const {
  Int o = 1;
  for (Int f : factors_) o = checked::mul(o, f);
  return o;
}

AbElement FinAbGroup::reduce(std::vector<Int> coords) const {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = mod(coords[i], factors_[i]);
  return AbElement{std::move(coords)};
}

AbElement FinAbGroup::identity() const { return AbElement{std::vector<Int>(factors_.size(), 0)}; }

AbElement FinAbGroup::generator(std::size_t i) const {
  if (i >= coordinate_map_.size()) throw InvalidArgument("generator index out of range");
  return reduce(coordinate_map_[i]);
}

AbElement FinAbGroup::from_exponents(std::span<const Int> exponents) const {
  if (exponents.size() != coordinate_map_.size())
    throw InvalidArgument("exponent vector length does not match generator count");
  std::vector<Int> acc(factors_.size(), 0);
  for (std::size_t g = 0; g < exponents.size(); ++g) {
    // Reduce before multiplying to keep products small.
    for (std::size_t k = 0; k < factors_.size(); ++k) {
      const Int e = mod(exponents[g], factors_[k]);
      acc[k] = mod(checked::add(acc[k], checked::mul(e, coordinate_map_[g][k])), factors_[k]);
    }
  }
  return AbElement{std::move(acc)};
}

AbElement FinAbGroup::add(const AbElement& a, const AbElement& b) const {
  std::vector<Int> c(factors_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = checked::add(a.coords[k], b.coords[k]);
  return reduce(std::move(c));
}

AbElement FinAbGroup::scale(const AbElement& a, Int s) const {
  std::vector<Int> c(factors_.size());
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] = checked::mul(mod(s, factors_[k]), a.coords[k]);
  return reduce(std::move(c));
}

bool FinAbGroup::is_identity(const AbElement& a) const {
  return std::all_of(a.coords.begin(), a.coords.end(), [](Int c) { return c == 0; });
}

FinAbGroup abgroup_from_relations(std::size_t num_gens,
                                  const std::vector<std::vector<Int>>& relations) {
  const IntMatrix a = IntMatrix::from_rows(relations, num_gens);
  const SnfResult snf = smith_normal_form(a);
  const std::vector<Int> diag = snf.diagonal();
  const std::size_t rank = snf.rank();
  if (rank < num_gens)
    throw InvalidArgument("relation lattice is not of full rank: free rank " +
                          std::to_string(num_gens - rank));

  // Row lattice of A maps onto that of S under x -> x·V, so generator i lands
  // on row i of V.
  FinAbGroup g;
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < num_gens; ++k)
    if (diag[k] != 1) {
      kept.push_back(k);
      g.factors_.push_back(diag[k]);
    }
  g.coordinate_map_.resize(num_gens);
  for (std::size_t i = 0; i < num_gens; ++i) {
    auto& row = g.coordinate_map_[i];
    for (std::size_t j = 0; j < kept.size(); ++j) row.push_back(mod(snf.V(i, kept[j]), g.factors_[j]));
  }
  return g;
}

Int element_order(const FinAbGroup& group, const AbElement& g) {
  Int o = 1;
  const auto& f = group.invariant_factors();
  for (std::size_t k = 0; k < f.size(); ++k) o = lcm(o, f[k] / gcd(f[k], g.coords[k]));
  return o;
}

}  // namespace qcover
