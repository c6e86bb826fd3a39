#ifndef WITTALG_SCALARS_TEST_RING_HPP
#define WITTALG_SCALARS_TEST_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wittalg/errors.hpp"
#include "wittalg/scalars/combinatorics.hpp"

namespace wittalg {

/// base[e_1,...,e_r]/(e_1^p,...,e_r^p) for a field `Base` of characteristic p.
/// Elements are dense coefficient vectors over the p^r monomials; the exponent of
/// e_j is the j-th base-p digit of the monomial index (e_1 least significant).
template <class Base>
class TestRing {
 public:
  using base_type = Base;
  using base_value = typename Base::value_type;
  using value_type = std::vector<base_value>;

  TestRing(Base base, int r) : base_(std::move(base)), r_(r) {
    if (r < 0) throw invalid_argument("TestRing: negative number of nilpotents");
    if (r > 3) throw invalid_argument("TestRing: at most 3 nilpotent generators are supported");
    p_ = base_.characteristic();
    dim_ = static_cast<std::size_t>(ipow(p_, static_cast<std::uint64_t>(r)));
    auto table = std::make_shared<std::vector<std::int32_t>>(dim_ * dim_, -1);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        std::size_t a = i, b = j, out = 0, place = 1;
        bool ok = true;
        for (int k = 0; k < r_; ++k) {
          std::size_t d = a % p_ + b % p_;
          if (d >= p_) {
            ok = false;
            break;
          }
          out += d * place;
          place *= p_;
          a /= p_;
          b /= p_;
        }
        if (ok) (*table)[i * dim_ + j] = static_cast<std::int32_t>(out);
      }
    table_ = std::move(table);
  }

  const Base& base() const { return base_; }
  int nilpotents() const { return r_; }
  std::size_t monomial_count() const { return dim_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_field() const { return r_ == 0; }
  std::string name() const {
    return base_.name() + "[e;" + std::to_string(r_) + "]";
  }

  value_type zero() const { return value_type(dim_, base_.zero()); }
  value_type one() const { return constant(base_.one()); }
  value_type from_int(std::int64_t n) const { return constant(base_.from_int(n)); }
  value_type constant(const base_value& c) const {
    value_type v = zero();
    v[0] = c;
    return v;
  }
  /// The nilpotent generator e_j (0-based).
  value_type epsilon(int j) const {
    if (j < 0 || j >= r_) throw invalid_argument("TestRing: nilpotent index out of range");
    value_type v = zero();
    v[static_cast<std::size_t>(ipow(p_, static_cast<std::uint64_t>(j)))] = base_.one();
    return v;
  }
  const base_value& constant_term(const value_type& a) const { return a[0]; }

  value_type add(const value_type& a, const value_type& b) const {
    value_type r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) r[i] = base_.add(a[i], b[i]);
    return r;
  }
  value_type sub(const value_type& a, const value_type& b) const {
    value_type r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) r[i] = base_.sub(a[i], b[i]);
    return r;
  }
  value_type neg(const value_type& a) const {
    value_type r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) r[i] = base_.neg(a[i]);
    return r;
  }
  value_type mul(const value_type& a, const value_type& b) const {
    value_type r = zero();
    const auto& t = *table_;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (base_.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        std::int32_t k = t[i * dim_ + j];
        if (k < 0 || base_.is_zero(b[j])) continue;
        r[static_cast<std::size_t>(k)] = base_.add(r[static_cast<std::size_t>(k)], base_.mul(a[i], b[j]));
      }
    }
    return r;
  }
  value_type scale(const base_value& c, const value_type& a) const {
    value_type r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) r[i] = base_.mul(c, a[i]);
    return r;
  }
  bool is_zero(const value_type& a) const {
    for (auto& c : a)
      if (!base_.is_zero(c)) return false;
    return true;
  }
  bool equal(const value_type& a, const value_type& b) const {
    for (std::size_t i = 0; i < dim_; ++i)
      if (!base_.equal(a[i], b[i])) return false;
    return true;
  }
  bool is_unit(const value_type& a) const { return !base_.is_zero(a[0]); }
  bool is_nilpotent(const value_type& a) const { return base_.is_zero(a[0]); }

  /// c^{-1} sum_k (-n)^k for a = c(1 + n); the series stops after r(p-1) terms.
  std::optional<value_type> inverse(const value_type& a) const {
    auto c_inv = base_.inverse(a[0]);
    if (!c_inv) return std::nullopt;
    value_type n = scale(*c_inv, a);
    n[0] = base_.zero();
    value_type minus_n = neg(n);
    value_type term = one(), sum = one();
    for (int k = 0; k < r_ * static_cast<int>(p_ - 1); ++k) {
      term = mul(term, minus_n);
      sum = add(sum, term);
    }
    return scale(*c_inv, sum);
  }

  template <class Rng>
  value_type random(Rng& rng) const {
    value_type v(dim_);
    for (auto& c : v) c = base_.random(rng);
    return v;
  }
  template <class Rng>
  value_type random_nilpotent(Rng& rng) const {
    value_type v = random(rng);
    v[0] = base_.zero();
    return v;
  }

  std::vector<std::uint64_t> exponents(std::size_t idx) const {
    return base_p_digits(idx, p_, static_cast<std::size_t>(r_));
  }

  std::string to_string(const value_type& a) const {
    std::string s;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (base_.is_zero(a[i])) continue;
      if (!s.empty()) s += " + ";
      std::string mono;
      auto e = exponents(i);
      for (int j = 0; j < r_; ++j) {
        if (!e[static_cast<std::size_t>(j)]) continue;
        if (!mono.empty()) mono += "*";
        mono += "e" + std::to_string(j + 1);
        if (e[static_cast<std::size_t>(j)] > 1) mono += "^" + std::to_string(e[static_cast<std::size_t>(j)]);
      }
      std::string c = base_.to_string(a[i]);
      if (mono.empty()) s += c;
      else if (c == "1") s += mono;
      else s += "(" + c + ")*" + mono;
    }
    return s.empty() ? "0" : s;
  }
  /// Sparse [[exponents], coefficient] pairs in monomial order.
  nlohmann::json to_json(const value_type& a) const {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < dim_; ++i)
      if (!base_.is_zero(a[i])) out.push_back({exponents(i), base_.to_json(a[i])});
    return out;
  }
  value_type from_json(const nlohmann::json& j) const {
    if (!j.is_array()) throw invalid_argument("test ring element must be a list of [exponents, coefficient]");
    value_type v = zero();
    for (auto& term : j) {
      if (!term.is_array() || term.size() != 2 || !term[0].is_array() ||
          term[0].size() != static_cast<std::size_t>(r_))
        throw invalid_argument("malformed test ring term");
      std::size_t idx = 0, place = 1;
      for (auto& e : term[0]) {
        auto x = e.get<std::int64_t>();
        if (x < 0 || x >= static_cast<std::int64_t>(p_)) throw invalid_argument("test ring exponent out of range");
        idx += static_cast<std::size_t>(x) * place;
        place *= p_;
      }
      v[idx] = base_.add(v[idx], base_.from_json(term[1]));
    }
    return v;
  }

  bool operator==(const TestRing& o) const { return base_ == o.base_ && r_ == o.r_; }

 private:
  Base base_;
  int r_;
  std::uint32_t p_;
  std::size_t dim_;
  std::shared_ptr<const std::vector<std::int32_t>> table_;
};

template <class Base>
TestRing<Base> make_test_ring(Base base, int r) {
  return TestRing<Base>(std::move(base), r);
}

}  // namespace wittalg

#endif  // WITTALG_SCALARS_TEST_RING_HPP
