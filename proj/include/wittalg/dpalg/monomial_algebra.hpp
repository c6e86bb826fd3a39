#ifndef WITTALG_DPALG_MONOMIAL_ALGEBRA_HPP
#define WITTALG_DPALG_MONOMIAL_ALGEBRA_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wittalg/linalg.hpp"
#include "wittalg/scalars/ring.hpp"

namespace wittalg {

/// A finite-rank commutative unital algebra over a scalar ring whose basis is closed
/// under multiplication up to scalars: b_i * b_j = c_ij b_{k(i,j)} (or 0). Basis
/// element 0 is the unit. The algebra also carries its coordinate partial derivatives,
/// the standard generators of its module of derivations.
template <ScalarRing R>
class MonomialAlgebra {
 public:
  using value_type = typename R::value_type;
  struct Product {
    std::int32_t index = -1;  // -1 when the product vanishes
    value_type coeff;
  };

  MonomialAlgebra(R ring, std::vector<std::string> labels, std::vector<Product> table,
                  std::vector<Matrix<R>> partials = {})
      : ring_(std::move(ring)),
        labels_(std::make_shared<const std::vector<std::string>>(std::move(labels))),
        table_(std::make_shared<const std::vector<Product>>(std::move(table))),
        partials_(std::make_shared<const std::vector<Matrix<R>>>(std::move(partials))) {
    dim_ = labels_->size();
    if (table_->size() != dim_ * dim_) throw invalid_argument("MonomialAlgebra: table has wrong size");
  }

  const R& ring() const { return ring_; }
  std::size_t dim() const { return dim_; }
  const std::string& label(std::size_t i) const { return (*labels_)[i]; }
  const Product& product(std::size_t i, std::size_t j) const { return (*table_)[i * dim_ + j]; }
  std::size_t variables() const { return partials_->size(); }
  const Matrix<R>& partial(std::size_t i) const { return (*partials_)[i]; }

  /// Basis index of the coordinate x_i, the element with partial_k(x_i) = delta_ik.
  std::size_t coordinate(std::size_t i) const {
    for (std::size_t idx = 1; idx < dim_; ++idx) {
      bool ok = true;
      for (std::size_t k = 0; k < variables() && ok; ++k)
        for (std::size_t r = 0; r < dim_ && ok; ++r) {
          const auto& v = partial(k)(r, idx);
          bool want_one = (k == i && r == 0);
          ok = want_one ? ring_.equal(v, ring_.one()) : ring_.is_zero(v);
        }
      if (ok) return idx;
    }
    throw invalid_argument("algebra has no coordinate for variable " + std::to_string(i));
  }

  /// Same ring, basis and table.
  bool same_as(const MonomialAlgebra& o) const {
    return table_ == o.table_ || (dim_ == o.dim_ && *labels_ == *o.labels_ && ring_.name() == o.ring_.name());
  }

  Vec<R> zero() const { return Vec<R>(dim_, ring_.zero()); }
  Vec<R> one() const { return basis(0); }
  Vec<R> basis(std::size_t i) const {
    auto v = zero();
    v[i] = ring_.one();
    return v;
  }
  Vec<R> scalar(const value_type& c) const {
    auto v = zero();
    v[0] = c;
    return v;
  }

  Vec<R> mul(const Vec<R>& a, const Vec<R>& b) const {
    auto out = zero();
    for (std::size_t i = 0; i < dim_; ++i) {
      if (ring_.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (ring_.is_zero(b[j])) continue;
        const auto& pr = product(i, j);
        if (pr.index < 0) continue;
        auto k = static_cast<std::size_t>(pr.index);
        out[k] = ring_.add(out[k], ring_.mul(pr.coeff, ring_.mul(a[i], b[j])));
      }
    }
    return out;
  }
  Vec<R> add(const Vec<R>& a, const Vec<R>& b) const {
    Vec<R> r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) r[i] = ring_.add(a[i], b[i]);
    return r;
  }
  Vec<R> sub(const Vec<R>& a, const Vec<R>& b) const {
    Vec<R> r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) r[i] = ring_.sub(a[i], b[i]);
    return r;
  }
  Vec<R> scale(const value_type& c, const Vec<R>& a) const {
    Vec<R> r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) r[i] = ring_.mul(c, a[i]);
    return r;
  }
  Vec<R> pow(Vec<R> a, std::uint64_t e) const {
    auto r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      e >>= 1;
      if (e) a = mul(a, a);
    }
    return r;
  }
  bool is_zero(const Vec<R>& a) const { return vec_is_zero(ring_, a); }
  bool equal(const Vec<R>& a, const Vec<R>& b) const {
    for (std::size_t i = 0; i < dim_; ++i)
      if (!ring_.equal(a[i], b[i])) return false;
    return true;
  }

  /// Matrix of f -> u f on the basis (columns are images).
  Matrix<R> mult_matrix(const Vec<R>& u) const {
    Matrix<R> m(ring_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) mat::set_column(m, j, mul(u, basis(j)));
    return m;
  }

  std::optional<Vec<R>> inverse(const Vec<R>& u) const {
    auto inv = wittalg::inverse(ring_, mult_matrix(u));
    if (!inv) return std::nullopt;
    return mat::column(*inv, 0);
  }
  bool is_unit(const Vec<R>& u) const { return inverse(u).has_value(); }

  std::string to_string(const Vec<R>& a) const {
    std::string s;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (ring_.is_zero(a[i])) continue;
      if (!s.empty()) s += " + ";
      auto c = ring_.to_string(a[i]);
      if (i == 0) s += c;
      else if (c == "1") s += label(i);
      else s += "(" + c + ")*" + label(i);
    }
    return s.empty() ? "0" : s;
  }

 private:
  R ring_;
  std::size_t dim_;
  std::shared_ptr<const std::vector<std::string>> labels_;
  std::shared_ptr<const std::vector<Product>> table_;
  std::shared_ptr<const std::vector<Matrix<R>>> partials_;
};

}  // namespace wittalg

#endif  // WITTALG_DPALG_MONOMIAL_ALGEBRA_HPP
