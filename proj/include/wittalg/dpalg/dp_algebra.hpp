#ifndef WITTALG_DPALG_DP_ALGEBRA_HPP
#define WITTALG_DPALG_DP_ALGEBRA_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "wittalg/dpalg/monomial_algebra.hpp"
#include "wittalg/errors.hpp"
#include "wittalg/linalg.hpp"
#include "wittalg/scalars/combinatorics.hpp"
#include "wittalg/scalars/ring.hpp"

namespace wittalg {

using MultiIndex = std::vector<std::uint64_t>;

template <ScalarRing R>
class DPAlgebra;

/// Element of A(m;n) over R in canonical sparse form: (basis index, nonzero coefficient)
/// pairs sorted by index.
template <ScalarRing R>
class DPElement {
 public:
  using value_type = typename R::value_type;
  using Term = std::pair<std::size_t, value_type>;

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

 private:
  friend class DPAlgebra<R>;
  const void* owner_ = nullptr;
  std::vector<Term> terms_;
};

/// The truncated divided power algebra A(m;n) = span{x^(a) : a_i < p^{n_i}} over R.
/// Basis indices enumerate multi-indices lexicographically (first coordinate most
/// significant).
template <ScalarRing R>
class DPAlgebra {
 public:
  using value_type = typename R::value_type;
  using Element = DPElement<R>;

  DPAlgebra(std::uint32_t p, std::vector<int> n, R ring) : s_(std::make_shared<State>(std::move(ring))) {
    if (!is_prime(p)) throw invalid_argument("DPAlgebra: " + std::to_string(p) + " is not prime");
    if (ring_char() != p) throw invalid_argument("DPAlgebra: ring characteristic differs from p");
    if (n.empty()) throw invalid_argument("DPAlgebra: need at least one variable");
    for (int ni : n)
      if (ni < 1) throw invalid_argument("DPAlgebra: exponent bounds must be positive");
    auto& s = const_cast<State&>(*s_);
    s.p = p;
    s.n = std::move(n);
    std::size_t m = s.n.size();
    s.bound.resize(m);
    s.stride.assign(m, 1);
    for (std::size_t i = 0; i < m; ++i) s.bound[i] = ipow(p, static_cast<std::uint64_t>(s.n[i]));
    for (std::size_t i = m - 1; i-- > 0;) s.stride[i] = s.stride[i + 1] * s.bound[i + 1];
    s.dim = s.stride[0] * s.bound[0];
    if (s.dim > 4096) throw resource_error("DPAlgebra: dimension above 4096");
    build_tables(s);
  }

  std::uint32_t p() const { return s_->p; }
  std::size_t m() const { return s_->n.size(); }
  const std::vector<int>& n() const { return s_->n; }
  const R& ring() const { return s_->ring; }
  std::size_t dim() const { return s_->dim; }
  std::uint64_t bound(std::size_t i) const { return s_->bound[i]; }
  const MonomialAlgebra<R>& monomial_algebra() const { return *s_->mono; }
  bool operator==(const DPAlgebra& o) const {
    return s_ == o.s_ || (s_->p == o.s_->p && s_->n == o.s_->n && ring().name() == o.ring().name());
  }

  std::size_t index_of(const MultiIndex& a) const {
    if (a.size() != m()) throw invalid_argument("multi-index has wrong length");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] >= s_->bound[i]) throw invalid_argument("multi-index out of bounds");
      idx += a[i] * s_->stride[i];
    }
    return idx;
  }
  const MultiIndex& multi_index(std::size_t idx) const { return s_->alpha[idx]; }
  std::uint64_t total_degree(std::size_t idx) const { return s_->degree[idx]; }
  bool in_bounds(const MultiIndex& a) const {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] >= s_->bound[i]) return false;
    return true;
  }

  /// Basis index of x_i^(p^s).
  std::size_t generator_index(std::size_t i, std::size_t s) const {
    MultiIndex a(m(), 0);
    a[i] = ipow(p(), s);
    return index_of(a);
  }

  // ---- sparse elements ----
  Element zero() const { return make({}); }
  Element one() const { return constant(ring().one()); }
  Element constant(const value_type& c) const { return monomial(0, c); }
  Element monomial(std::size_t idx, const value_type& c) const {
    if (ring().is_zero(c)) return zero();
    return make({{idx, c}});
  }
  Element monomial(const MultiIndex& a, const value_type& c) const { return monomial(index_of(a), c); }
  Element basis(std::size_t idx) const { return monomial(idx, ring().one()); }
  Element x(std::size_t i) const { return basis(generator_index(i, 0)); }
  Element generator(std::size_t i, std::size_t s) const { return basis(generator_index(i, s)); }

  Element from_dense(const Vec<R>& v) const {
    if (v.size() != dim()) throw invalid_argument("dense vector has wrong length");
    std::vector<typename Element::Term> t;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!ring().is_zero(v[i])) t.emplace_back(i, v[i]);
    return make(std::move(t));
  }
  Vec<R> to_dense(const Element& f) const {
    check(f);
    Vec<R> v(dim(), ring().zero());
    for (auto& [i, c] : f.terms_) v[i] = c;
    return v;
  }

  Element add(const Element& f, const Element& g) const { return from_dense(monomial_algebra().add(to_dense(f), to_dense(g))); }
  Element sub(const Element& f, const Element& g) const { return from_dense(monomial_algebra().sub(to_dense(f), to_dense(g))); }
  Element neg(const Element& f) const { return scale(ring().from_int(-1), f); }
  Element scale(const value_type& c, const Element& f) const {
    check(f);
    std::vector<typename Element::Term> t;
    for (auto& [i, a] : f.terms_) {
      auto v = ring().mul(c, a);
      if (!ring().is_zero(v)) t.emplace_back(i, v);
    }
    return make(std::move(t));
  }
  Element mul(const Element& f, const Element& g) const {
    check(f);
    check(g);
    Vec<R> out(dim(), ring().zero());
    const auto& mono = monomial_algebra();
    for (auto& [i, a] : f.terms_)
      for (auto& [j, b] : g.terms_) {
        const auto& pr = mono.product(i, j);
        if (pr.index < 0) continue;
        auto k = static_cast<std::size_t>(pr.index);
        out[k] = ring().add(out[k], ring().mul(pr.coeff, ring().mul(a, b)));
      }
    return from_dense(out);
  }
  Element pow(const Element& f, std::uint64_t e) const { return from_dense(monomial_algebra().pow(to_dense(f), e)); }
  bool equal(const Element& f, const Element& g) const {
    check(f);
    check(g);
    if (f.terms_.size() != g.terms_.size()) return false;
    for (std::size_t k = 0; k < f.terms_.size(); ++k)
      if (f.terms_[k].first != g.terms_[k].first || !ring().equal(f.terms_[k].second, g.terms_[k].second))
        return false;
    return true;
  }
  value_type coefficient(const Element& f, std::size_t idx) const {
    check(f);
    for (auto& [i, c] : f.terms_)
      if (i == idx) return c;
    return ring().zero();
  }

  /// The augmentation: coefficient of x^(0).
  value_type augmentation(const Element& f) const { return coefficient(f, 0); }

  /// Divided power gamma_r on the augmentation ideal.
  Element gamma(const Element& f, std::uint64_t r) const {
    if (!ring().is_zero(augmentation(f))) throw nonzero_constant_term("gamma: argument has nonzero constant term");
    return from_dense(gamma_dense(to_dense(f), r));
  }

  /// gamma_r of a single term c x^(a) (a != 0): c^r * coeff * x^(r a), truncated when r a
  /// leaves the basis.
  Vec<R> gamma_monomial(std::size_t idx, const value_type& c, std::uint64_t r) const {
    Vec<R> out(dim(), ring().zero());
    const auto& a = multi_index(idx);
    MultiIndex ra(m());
    for (std::size_t i = 0; i < m(); ++i) ra[i] = a[i] * r;
    if (!in_bounds(ra)) return out;
    std::uint64_t coeff = gamma_coefficient(a, r, p());
    if (coeff == 0) return out;
    out[index_of(ra)] = ring().mul(ring().from_int(static_cast<std::int64_t>(coeff)), ring_pow(ring(), c, r));
    return out;
  }

  /// gamma_r on a dense element of the augmentation ideal, expanded term by term through
  /// gamma_r(f + g) = sum_j gamma_j(f) gamma_{r-j}(g).
  Vec<R> gamma_dense(const Vec<R>& f, std::uint64_t r) const {
    const auto& mono = monomial_algebra();
    if (!ring().is_zero(f[0])) throw nonzero_constant_term("gamma: argument has nonzero constant term");
    // acc[j] = gamma_j(sum of terms processed so far)
    std::vector<Vec<R>> acc(r + 1, mono.zero());
    acc[0] = mono.one();
    for (std::size_t idx = 1; idx < dim(); ++idx) {
      if (ring().is_zero(f[idx])) continue;
      // gamma_k of the term c x^(a) is a single monomial (or zero)
      std::vector<std::pair<long, value_type>> term(r + 1, {-1, ring().zero()});
      term[0] = {0, ring().one()};
      const auto& a = multi_index(idx);
      for (std::uint64_t k = 1; k <= r; ++k) {
        MultiIndex ka(m());
        for (std::size_t i = 0; i < m(); ++i) ka[i] = a[i] * k;
        if (!in_bounds(ka)) break;
        std::uint64_t coeff = gamma_coefficient(a, k, p());
        if (coeff == 0) continue;
        term[k] = {static_cast<long>(index_of(ka)),
                   ring().mul(ring().from_int(static_cast<std::int64_t>(coeff)), ring_pow(ring(), f[idx], k))};
      }
      std::vector<Vec<R>> next(r + 1, mono.zero());
      for (std::uint64_t i = 0; i <= r; ++i) {
        if (mono.is_zero(acc[i])) continue;
        for (std::uint64_t j = i; j <= r; ++j) {
          const auto& [t, c] = term[j - i];
          if (t < 0) continue;
          auto ti = static_cast<std::size_t>(t);
          for (std::size_t u = 0; u < dim(); ++u) {
            if (ring().is_zero(acc[i][u])) continue;
            const auto& pr = mono.product(u, ti);
            if (pr.index < 0) continue;
            auto k = static_cast<std::size_t>(pr.index);
            next[j][k] = ring().add(next[j][k], ring().mul(pr.coeff, ring().mul(acc[i][u], c)));
          }
        }
      }
      acc = std::move(next);
    }
    return acc[r];
  }

  // ---- rendering and serialization ----
  std::string monomial_label(std::size_t idx) const {
    const auto& a = multi_index(idx);
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += "x" + std::to_string(i + 1) + "^(" + std::to_string(a[i]) + ")";
    }
    return s.empty() ? "1" : s;
  }
  std::string to_string(const Element& f) const {
    check(f);
    std::string s;
    for (auto& [i, c] : f.terms_) {
      if (!s.empty()) s += " + ";
      auto cs = ring().to_string(c);
      if (i == 0) s += cs;
      else if (cs == "1") s += monomial_label(i);
      else s += "(" + cs + ")*" + monomial_label(i);
    }
    return s.empty() ? "0" : s;
  }
  nlohmann::json to_json(const Element& f) const {
    check(f);
    auto arr = nlohmann::json::array();
    for (auto& [i, c] : f.terms_) arr.push_back({multi_index(i), ring().to_json(c)});
    return arr;
  }
  Element from_json(const nlohmann::json& j) const {
    if (!j.is_array()) throw invalid_argument("element JSON must be an array of [exponents, coefficient]");
    Vec<R> v(dim(), ring().zero());
    for (auto& t : j) {
      if (!t.is_array() || t.size() != 2) throw invalid_argument("element term must be [exponents, coefficient]");
      auto idx = index_of(t[0].get<MultiIndex>());
      v[idx] = ring().add(v[idx], ring().from_json(t[1]));
    }
    return from_dense(v);
  }

  /// Coefficient of gamma_r(x^(a)) = c x^(r a): prod_i (r a_i)! / (a_i!)^r / r! mod p.
  static std::uint64_t gamma_coefficient(const MultiIndex& a, std::uint64_t r, std::uint64_t p) {
    std::int64_t v = -static_cast<std::int64_t>(legendre_valuation(r, p));
    std::uint64_t num = 1, den = factorial_unit_residue(r, p);
    for (auto ai : a) {
      v += static_cast<std::int64_t>(legendre_valuation(r * ai, p)) -
           static_cast<std::int64_t>(r * legendre_valuation(ai, p));
      num = num * factorial_unit_residue(r * ai, p) % p;
      den = den * pow_mod(factorial_unit_residue(ai, p), r, p) % p;
    }
    if (v > 0) return 0;
    return num * inv_mod(den, p) % p;
  }

 private:
  struct State {
    explicit State(R r) : ring(std::move(r)) {}
    R ring;
    std::uint32_t p = 0;
    std::vector<int> n;
    std::vector<std::uint64_t> bound, stride;
    std::size_t dim = 0;
    std::vector<MultiIndex> alpha;
    std::vector<std::uint64_t> degree;
    std::unique_ptr<MonomialAlgebra<R>> mono;
  };

  std::uint32_t ring_char() const { return s_->ring.characteristic(); }

  void build_tables(State& s) const {
    std::size_t m = s.n.size();
    s.alpha.resize(s.dim);
    s.degree.resize(s.dim);
    for (std::size_t idx = 0; idx < s.dim; ++idx) {
      MultiIndex a(m);
      std::size_t rest = idx;
      for (std::size_t i = 0; i < m; ++i) {
        a[i] = rest / s.stride[i];
        rest %= s.stride[i];
      }
      s.degree[idx] = 0;
      for (auto ai : a) s.degree[idx] += ai;
      s.alpha[idx] = std::move(a);
    }
    using Product = typename MonomialAlgebra<R>::Product;
    std::vector<Product> table(s.dim * s.dim);
    for (std::size_t i = 0; i < s.dim; ++i)
      for (std::size_t j = 0; j < s.dim; ++j) {
        std::uint64_t c = 1;
        std::size_t k = 0;
        for (std::size_t v = 0; v < m && c; ++v) {
          std::uint64_t sum = s.alpha[i][v] + s.alpha[j][v];
          c = c * lucas_binomial(sum, s.alpha[i][v], s.p) % s.p;
          if (c && sum >= s.bound[v]) throw std::logic_error("divided power product left the basis");
          k += sum * s.stride[v];
        }
        Product pr;
        pr.coeff = s.ring.from_int(static_cast<std::int64_t>(c));
        pr.index = c ? static_cast<std::int32_t>(k) : -1;
        table[i * s.dim + j] = std::move(pr);
      }
    std::vector<Matrix<R>> partials;
    for (std::size_t v = 0; v < m; ++v) {
      Matrix<R> d(s.ring, s.dim, s.dim);
      for (std::size_t idx = 0; idx < s.dim; ++idx)
        if (s.alpha[idx][v] > 0) d(idx - s.stride[v], idx) = s.ring.one();
      partials.push_back(std::move(d));
    }
    std::vector<std::string> labels;
    for (std::size_t idx = 0; idx < s.dim; ++idx) {
      std::string l;
      for (std::size_t v = 0; v < m; ++v)
        if (s.alpha[idx][v]) l += (l.empty() ? "" : "*") + ("x" + std::to_string(v + 1) + "^(" + std::to_string(s.alpha[idx][v]) + ")");
      labels.push_back(l.empty() ? "1" : l);
    }
    s.mono = std::make_unique<MonomialAlgebra<R>>(s.ring, std::move(labels), std::move(table), std::move(partials));
  }

  Element make(std::vector<typename Element::Term> t) const {
    Element e;
    e.owner_ = s_.get();
    e.terms_ = std::move(t);
    return e;
  }
  void check(const Element& f) const {
    if (f.owner_ != s_.get()) throw algebra_mismatch("element belongs to a different divided power algebra");
  }

  std::shared_ptr<const State> s_;
};

}  // namespace wittalg

#endif  // WITTALG_DPALG_DP_ALGEBRA_HPP
