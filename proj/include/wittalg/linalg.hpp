#ifndef WITTALG_LINALG_HPP
#define WITTALG_LINALG_HPP

// Exact dense linear algebra over a scalar ring context. Elimination routines
// require a field; matrices over a TestRing are inverted by lifting from the
// residue field.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "wittalg/errors.hpp"
#include "wittalg/scalars/ring.hpp"
#include "wittalg/scalars/test_ring.hpp"

namespace wittalg {

template <ScalarRing R>
struct Matrix {
  using value_type = typename R::value_type;
  std::size_t rows = 0, cols = 0;
  std::vector<value_type> data;

  Matrix() = default;
  Matrix(const R& ring, std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, ring.zero()) {}
  /// Row-major entries.
  Matrix(const R&, std::size_t r, std::size_t c, std::vector<value_type> entries)
      : rows(r), cols(c), data(std::move(entries)) {
    if (data.size() != r * c) throw invalid_argument("Matrix: wrong number of entries");
  }

  value_type& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

template <ScalarRing R>
using Vec = std::vector<typename R::value_type>;

namespace mat {

template <ScalarRing R>
Matrix<R> identity(const R& ring, std::size_t n) {
  Matrix<R> m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

template <ScalarRing R>
Matrix<R> mul(const R& ring, const Matrix<R>& a, const Matrix<R>& b) {
  if (a.cols != b.rows) throw invalid_argument("matrix product: shape mismatch");
  Matrix<R> c(ring, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const auto& aik = a(i, k);
      if (ring.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        const auto& bkj = b(k, j);
        if (ring.is_zero(bkj)) continue;
        c(i, j) = ring.add(c(i, j), ring.mul(aik, bkj));
      }
    }
  return c;
}

template <ScalarRing R>
Matrix<R> add(const R& ring, const Matrix<R>& a, const Matrix<R>& b) {
  Matrix<R> c = a;
  for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] = ring.add(a.data[i], b.data[i]);
  return c;
}

template <ScalarRing R>
Matrix<R> sub(const R& ring, const Matrix<R>& a, const Matrix<R>& b) {
  Matrix<R> c = a;
  for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] = ring.sub(a.data[i], b.data[i]);
  return c;
}

template <ScalarRing R>
Matrix<R> scale(const R& ring, const typename R::value_type& s, const Matrix<R>& a) {
  Matrix<R> c = a;
  for (auto& v : c.data) v = ring.mul(s, v);
  return c;
}

/// a*b - b*a
template <ScalarRing R>
Matrix<R> commutator(const R& ring, const Matrix<R>& a, const Matrix<R>& b) {
  return sub(ring, mul(ring, a, b), mul(ring, b, a));
}

template <ScalarRing R>
Matrix<R> transpose(const R& ring, const Matrix<R>& a) {
  Matrix<R> t(ring, a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

template <ScalarRing R>
Vec<R> apply(const R& ring, const Matrix<R>& a, const Vec<R>& v) {
  Vec<R> out(a.rows, ring.zero());
  for (std::size_t j = 0; j < a.cols; ++j) {
    if (ring.is_zero(v[j])) continue;
    for (std::size_t i = 0; i < a.rows; ++i)
      if (!ring.is_zero(a(i, j))) out[i] = ring.add(out[i], ring.mul(a(i, j), v[j]));
  }
  return out;
}

template <ScalarRing R>
Vec<R> column(const Matrix<R>& a, std::size_t j) {
  Vec<R> c(a.rows);
  for (std::size_t i = 0; i < a.rows; ++i) c[i] = a(i, j);
  return c;
}

template <ScalarRing R>
void set_column(Matrix<R>& a, std::size_t j, const Vec<R>& c) {
  for (std::size_t i = 0; i < a.rows; ++i) a(i, j) = c[i];
}

template <ScalarRing R>
bool equal(const R& ring, const Matrix<R>& a, const Matrix<R>& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (std::size_t i = 0; i < a.data.size(); ++i)
    if (!ring.equal(a.data[i], b.data[i])) return false;
  return true;
}

template <ScalarRing R>
bool is_zero(const R& ring, const Matrix<R>& a) {
  for (auto& v : a.data)
    if (!ring.is_zero(v)) return false;
  return true;
}

template <ScalarRing R>
Matrix<R> power(const R& ring, const Matrix<R>& a, std::uint64_t e) {
  Matrix<R> r = identity(ring, a.rows), b = a;
  while (e) {
    if (e & 1) r = mul(ring, r, b);
    e >>= 1;
    if (e) b = mul(ring, b, b);
  }
  return r;
}

/// Flattens row-major.
template <ScalarRing R>
const Vec<R>& flatten(const Matrix<R>& a) {
  return a.data;
}

}  // namespace mat

template <ScalarRing F>
bool vec_is_zero(const F& field, const Vec<F>& v) {
  for (auto& x : v)
    if (!field.is_zero(x)) return false;
  return true;
}

template <ScalarRing F>
bool vec_equal(const F& field, const Vec<F>& a, const Vec<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!field.equal(a[i], b[i])) return false;
  return true;
}

/// In-place reduced row echelon form over a field. Returns pivot columns.
template <ScalarRing F>
std::vector<std::size_t> rref(const F& field, Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t piv = row;
    while (piv < m.rows && field.is_zero(m(piv, col))) ++piv;
    if (piv == m.rows) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(row, j));
    auto inv = *field.inverse(m(row, col));
    for (std::size_t j = col; j < m.cols; ++j) m(row, j) = field.mul(inv, m(row, j));
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || field.is_zero(m(i, col))) continue;
      auto f = m(i, col);
      for (std::size_t j = col; j < m.cols; ++j)
        if (!field.is_zero(m(row, j))) m(i, j) = field.sub(m(i, j), field.mul(f, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <ScalarRing F>
std::size_t rank(const F& field, Matrix<F> m) {
  return rref(field, m).size();
}

/// Basis of {v : m v = 0}.
template <ScalarRing F>
std::vector<Vec<F>> nullspace(const F& field, Matrix<F> m) {
  auto pivots = rref(field, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(m.cols, field.zero());
    v[free] = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field.neg(m(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <ScalarRing F>
std::optional<Vec<F>> solve(const F& field, const Matrix<F>& a, const Vec<F>& b) {
  Matrix<F> aug(field, a.rows, a.cols + 1);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) aug(i, j) = a(i, j);
    aug(i, a.cols) = b[i];
  }
  auto pivots = rref(field, aug);
  if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt;
  Vec<F> x(a.cols, field.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols);
  return x;
}

template <ScalarRing F>
std::optional<Matrix<F>> inverse_field(const F& field, const Matrix<F>& a) {
  if (a.rows != a.cols) return std::nullopt;
  std::size_t n = a.rows;
  Matrix<F> aug(field, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = field.one();
  }
  auto pivots = rref(field, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <class R>
struct is_test_ring : std::false_type {};
template <class B>
struct is_test_ring<TestRing<B>> : std::true_type {};

/// Inverse over a TestRing: invert the residue matrix, then sum the truncated
/// Neumann series in the nilpotent correction.
template <class B>
std::optional<Matrix<TestRing<B>>> inverse_local(const TestRing<B>& ring, const Matrix<TestRing<B>>& a) {
  using R = TestRing<B>;
  const B& base = ring.base();
  std::size_t n = a.rows;
  Matrix<B> residue(base, n, n);
  for (std::size_t i = 0; i < a.data.size(); ++i) residue.data[i] = ring.constant_term(a.data[i]);
  auto rinv = inverse_field(base, residue);
  if (!rinv) return std::nullopt;
  Matrix<R> r0(ring, n, n);
  for (std::size_t i = 0; i < r0.data.size(); ++i) r0.data[i] = ring.constant(rinv->data[i]);
  // r0 * a = 1 + N with N nilpotent
  Matrix<R> nil = mat::sub(ring, mat::mul(ring, r0, a), mat::identity(ring, n));
  Matrix<R> minus_nil = mat::scale(ring, ring.from_int(-1), nil);
  Matrix<R> term = mat::identity(ring, n), sum = term;
  int steps = ring.nilpotents() * static_cast<int>(ring.characteristic() - 1);
  for (int k = 0; k < steps; ++k) {
    term = mat::mul(ring, term, minus_nil);
    if (mat::is_zero(ring, term)) break;
    sum = mat::add(ring, sum, term);
  }
  return mat::mul(ring, sum, r0);
}

template <ScalarRing R>
std::optional<Matrix<R>> inverse(const R& ring, const Matrix<R>& a) {
  if constexpr (is_test_ring<R>::value) {
    return inverse_local(ring, a);
  } else {
    return inverse_field(ring, a);
  }
}

/// Incrementally maintained subspace of F^n in reduced echelon form.
template <ScalarRing F>
class Subspace {
 public:
  Subspace(F field, std::size_t n) : field_(std::move(field)), n_(n) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  const std::vector<Vec<F>>& basis() const { return rows_; }

  /// Reduces v against the current basis.
  Vec<F> reduce(Vec<F> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      auto c = v[pivots_[r]];
      if (field_.is_zero(c)) continue;
      const auto& row = rows_[r];
      for (std::size_t j = pivots_[r]; j < n_; ++j)
        if (!field_.is_zero(row[j])) v[j] = field_.sub(v[j], field_.mul(c, row[j]));
    }
    return v;
  }
  bool contains(const Vec<F>& v) const { return vec_is_zero(field_, reduce(v)); }

  /// Adds v; returns true if the dimension grew.
  bool insert(const Vec<F>& v) {
    auto w = reduce(v);
    std::size_t piv = 0;
    while (piv < n_ && field_.is_zero(w[piv])) ++piv;
    if (piv == n_) return false;
    auto inv = *field_.inverse(w[piv]);
    for (std::size_t j = piv; j < n_; ++j) w[j] = field_.mul(inv, w[j]);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      auto c = rows_[r][piv];
      if (field_.is_zero(c)) continue;
      for (std::size_t j = piv; j < n_; ++j)
        if (!field_.is_zero(w[j])) rows_[r][j] = field_.sub(rows_[r][j], field_.mul(c, w[j]));
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, piv);
    rows_.insert(rows_.begin() + pos, std::move(w));
    return true;
  }

 private:
  F field_;
  std::size_t n_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Expresses vectors as combinations of a fixed linearly independent family.
template <ScalarRing F>
class SpanCoordinates {
 public:
  SpanCoordinates(F field, std::vector<Vec<F>> family) : field_(std::move(field)) {
    k_ = family.size();
    n_ = k_ ? family[0].size() : 0;
    for (std::size_t i = 0; i < k_; ++i) {
      Vec<F> row = family[i];
      Vec<F> coord(k_, field_.zero());
      coord[i] = field_.one();
      // reduce against existing rows
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        auto c = row[pivots_[r]];
        if (field_.is_zero(c)) continue;
        axpy(row, rows_[r], c);
        axpy(coord, coords_[r], c);
      }
      std::size_t piv = 0;
      while (piv < n_ && field_.is_zero(row[piv])) ++piv;
      if (piv == n_) throw invalid_argument("SpanCoordinates: family is linearly dependent");
      auto inv = *field_.inverse(row[piv]);
      for (auto& x : row) x = field_.mul(inv, x);
      for (auto& x : coord) x = field_.mul(inv, x);
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        auto c = rows_[r][piv];
        if (field_.is_zero(c)) continue;
        axpy(rows_[r], row, c);
        axpy(coords_[r], coord, c);
      }
      rows_.push_back(std::move(row));
      coords_.push_back(std::move(coord));
      pivots_.push_back(piv);
    }
  }

  std::size_t size() const { return k_; }

  /// Coordinates of v in the family, or nullopt if v is outside the span.
  std::optional<Vec<F>> express(Vec<F> v) const {
    Vec<F> out(k_, field_.zero());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      auto c = v[pivots_[r]];
      if (field_.is_zero(c)) continue;
      axpy(v, rows_[r], c);
      for (std::size_t j = 0; j < k_; ++j)
        if (!field_.is_zero(coords_[r][j])) out[j] = field_.add(out[j], field_.mul(c, coords_[r][j]));
    }
    if (!vec_is_zero(field_, v)) return std::nullopt;
    return out;
  }

 private:
  // x -= c * y
  void axpy(Vec<F>& x, const Vec<F>& y, const typename F::value_type& c) const {
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!field_.is_zero(y[j])) x[j] = field_.sub(x[j], field_.mul(c, y[j]));
  }

  F field_;
  std::size_t k_ = 0, n_ = 0;
  std::vector<Vec<F>> rows_, coords_;
  std::vector<std::size_t> pivots_;
};

}  // namespace wittalg

#endif  // WITTALG_LINALG_HPP
