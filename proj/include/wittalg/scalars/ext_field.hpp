#ifndef WITTALG_SCALARS_EXT_FIELD_HPP
#define WITTALG_SCALARS_EXT_FIELD_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wittalg/errors.hpp"
#include "wittalg/scalars/fp_poly.hpp"

namespace wittalg {

/// F_{p^k} = F_p[T]/(modulus) with the lexicographically least monic irreducible
/// modulus of degree k. Elements are coefficient vectors of length exactly k.
class ExtField {
 public:
  using value_type = std::vector<std::uint32_t>;

  ExtField(std::uint32_t p, int k) : p_(p), k_(k) {
    if (!is_prime(p)) throw invalid_argument("ExtField: " + std::to_string(p) + " is not prime");
    if (k < 1) throw invalid_argument("ExtField: degree must be positive");
    modulus_ = fp_poly::least_irreducible(k, p);
    size_ = ipow(p, static_cast<std::uint64_t>(k));
  }

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return k_; }
  const fp_poly::Poly& modulus() const { return modulus_; }
  static constexpr bool is_field() { return true; }
  std::uint64_t size() const { return size_; }
  std::string name() const { return "F" + std::to_string(p_) + "^" + std::to_string(k_); }

  value_type zero() const { return value_type(static_cast<std::size_t>(k_), 0); }
  value_type one() const { return from_int(1); }
  value_type from_int(std::int64_t n) const {
    value_type r = zero();
    std::int64_t m = n % static_cast<std::int64_t>(p_);
    r[0] = static_cast<std::uint32_t>(m < 0 ? m + p_ : m);
    return r;
  }
  /// The class of T.
  value_type generator() const {
    if (k_ == 1) return element(modulus_[0] ? p_ - modulus_[0] : 0);
    value_type r = zero();
    r[1] = 1;
    return r;
  }
  value_type element(std::uint64_t i) const {
    value_type r = zero();
    for (int j = 0; j < k_; ++j) {
      r[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(i % p_);
      i /= p_;
    }
    return r;
  }
  std::uint64_t index_of(const value_type& a) const {
    std::uint64_t i = 0;
    for (int j = k_; j-- > 0;) i = i * p_ + a[static_cast<std::size_t>(j)];
    return i;
  }

  value_type add(const value_type& a, const value_type& b) const {
    value_type r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::uint32_t s = a[i] + b[i];
      r[i] = s >= p_ ? s - p_ : s;
    }
    return r;
  }
  value_type sub(const value_type& a, const value_type& b) const { return add(a, neg(b)); }
  value_type neg(const value_type& a) const {
    value_type r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] ? p_ - a[i] : 0;
    return r;
  }
  value_type mul(const value_type& a, const value_type& b) const {
    return pad(fp_poly::mulmod(strip(a), strip(b), modulus_, p_));
  }
  bool is_zero(const value_type& a) const {
    for (auto c : a)
      if (c) return false;
    return true;
  }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  bool is_unit(const value_type& a) const { return !is_zero(a); }
  std::optional<value_type> inverse(const value_type& a) const {
    if (is_zero(a)) return std::nullopt;
    return pow(a, size_ - 2);
  }
  value_type pow(value_type a, std::uint64_t e) const {
    value_type r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  /// Inverse Frobenius: a^{q/p}.
  std::optional<value_type> pth_root(const value_type& a) const { return pow(a, size_ / p_); }

  template <class Rng>
  value_type random(Rng& rng) const {
    return element(std::uniform_int_distribution<std::uint64_t>(0, size_ - 1)(rng));
  }

  std::string to_string(const value_type& a) const {
    std::string s;
    for (int i = k_; i-- > 0;) {
      auto c = a[static_cast<std::size_t>(i)];
      if (!c) continue;
      if (!s.empty()) s += "+";
      if (i == 0 || c != 1) s += std::to_string(c);
      if (i > 0) s += (i == 1 ? "T" : "T^" + std::to_string(i));
    }
    return s.empty() ? "0" : s;
  }
  nlohmann::json to_json(const value_type& a) const { return a; }
  value_type from_json(const nlohmann::json& j) const {
    if (!j.is_array() || j.size() != static_cast<std::size_t>(k_))
      throw invalid_argument("F_q element must be a coefficient list of length " + std::to_string(k_));
    value_type r = zero();
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::int64_t c = j[i].get<std::int64_t>() % static_cast<std::int64_t>(p_);
      r[i] = static_cast<std::uint32_t>(c < 0 ? c + p_ : c);
    }
    return r;
  }

  bool operator==(const ExtField& o) const { return p_ == o.p_ && k_ == o.k_; }

 private:
  static fp_poly::Poly strip(const value_type& a) {
    fp_poly::Poly r(a);
    fp_poly::trim(r);
    return r;
  }
  value_type pad(fp_poly::Poly a) const {
    a.resize(static_cast<std::size_t>(k_), 0);
    return a;
  }

  std::uint32_t p_;
  int k_;
  fp_poly::Poly modulus_;
  std::uint64_t size_;
};

}  // namespace wittalg

#endif  // WITTALG_SCALARS_EXT_FIELD_HPP
