#ifndef WITTALG_SCALARS_RATFUNC_HPP
#define WITTALG_SCALARS_RATFUNC_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "wittalg/errors.hpp"
#include "wittalg/scalars/fp_poly.hpp"

namespace wittalg {

/// Rational function field F_p(var). Elements are stored reduced with a monic denominator.
class RatFuncField {
 public:
  struct value_type {
    fp_poly::Poly num;
    fp_poly::Poly den{1};
    bool operator==(const value_type&) const = default;
  };

  explicit RatFuncField(std::uint32_t p, std::string var = "t", int degree_cap = 4096)
      : p_(p), var_(std::move(var)), degree_cap_(degree_cap) {
    if (!is_prime(p)) throw invalid_argument("RatFuncField: " + std::to_string(p) + " is not prime");
  }

  std::uint32_t characteristic() const { return p_; }
  const std::string& variable() const { return var_; }
  static constexpr bool is_field() { return true; }
  std::string name() const { return "F" + std::to_string(p_) + "(" + var_ + ")"; }

  value_type zero() const { return {}; }
  value_type one() const { return {{1}, {1}}; }
  value_type from_int(std::int64_t n) const {
    std::int64_t m = n % static_cast<std::int64_t>(p_);
    if (m < 0) m += p_;
    if (m == 0) return {};
    return {{static_cast<std::uint32_t>(m)}, {1}};
  }
  /// The transcendental generator.
  value_type variable_element() const { return {{0, 1}, {1}}; }
  value_type from_polys(fp_poly::Poly num, fp_poly::Poly den) const {
    fp_poly::trim(num);
    fp_poly::trim(den);
    if (den.empty()) throw invalid_argument("RatFuncField: zero denominator");
    return normalize(std::move(num), std::move(den));
  }

  value_type add(const value_type& a, const value_type& b) const {
    if (a.num.empty()) return b;
    if (b.num.empty()) return a;
    if (a.den == b.den)
      return normalize(fp_poly::add(a.num, b.num, p_), a.den);
    return normalize(fp_poly::add(fp_poly::mul(a.num, b.den, p_), fp_poly::mul(b.num, a.den, p_), p_),
                     fp_poly::mul(a.den, b.den, p_));
  }
  value_type neg(const value_type& a) const { return {fp_poly::neg(a.num, p_), a.den}; }
  value_type sub(const value_type& a, const value_type& b) const { return add(a, neg(b)); }
  value_type mul(const value_type& a, const value_type& b) const {
    if (a.num.empty() || b.num.empty()) return {};
    // cross-cancel before multiplying
    auto g1 = fp_poly::gcd(a.num, b.den, p_);
    auto g2 = fp_poly::gcd(b.num, a.den, p_);
    auto an = fp_poly::divmod(a.num, g1, p_).first, bd = fp_poly::divmod(b.den, g1, p_).first;
    auto bn = fp_poly::divmod(b.num, g2, p_).first, ad = fp_poly::divmod(a.den, g2, p_).first;
    return normalize(fp_poly::mul(an, bn, p_), fp_poly::mul(ad, bd, p_));
  }
  bool is_zero(const value_type& a) const { return a.num.empty(); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  bool is_unit(const value_type& a) const { return !a.num.empty(); }
  std::optional<value_type> inverse(const value_type& a) const {
    if (a.num.empty()) return std::nullopt;
    return normalize(a.den, a.num);
  }
  /// p-th root when one exists (numerator and denominator both in F_p[var^p]).
  std::optional<value_type> pth_root(const value_type& a) const {
    auto root = [&](const fp_poly::Poly& f) -> std::optional<fp_poly::Poly> {
      fp_poly::Poly r;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (i % p_ == 0) r.push_back(f[i]);
        else if (f[i]) return std::nullopt;
      }
      fp_poly::trim(r);
      return r;
    };
    auto n = root(a.num);
    auto d = root(a.den);
    if (!n || !d) return std::nullopt;
    return normalize(*n, *d);
  }

  template <class Rng>
  value_type random(Rng& rng) const {
    std::uniform_int_distribution<std::uint32_t> c(0, p_ - 1);
    fp_poly::Poly n{c(rng), c(rng), c(rng)};
    fp_poly::Poly d{c(rng), 1};
    fp_poly::trim(n);
    return normalize(n, d);
  }

  std::string to_string(const value_type& a) const {
    auto show = [&](const fp_poly::Poly& f) {
      std::string s;
      for (std::size_t i = f.size(); i-- > 0;) {
        if (!f[i]) continue;
        if (!s.empty()) s += "+";
        if (i == 0 || f[i] != 1) s += std::to_string(f[i]);
        if (i > 0) s += (i == 1 ? var_ : var_ + "^" + std::to_string(i));
      }
      return s.empty() ? std::string("0") : s;
    };
    if (a.den.size() == 1) return show(a.num);
    return "(" + show(a.num) + ")/(" + show(a.den) + ")";
  }
  nlohmann::json to_json(const value_type& a) const { return {{"num", a.num}, {"den", a.den}}; }
  value_type from_json(const nlohmann::json& j) const {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
      throw invalid_argument("rational function must be {num, den}");
    auto read = [&](const nlohmann::json& arr) {
      fp_poly::Poly f;
      for (auto& c : arr) {
        std::int64_t v = c.get<std::int64_t>() % static_cast<std::int64_t>(p_);
        f.push_back(static_cast<std::uint32_t>(v < 0 ? v + p_ : v));
      }
      return f;
    };
    return from_polys(read(j["num"]), read(j["den"]));
  }

  bool operator==(const RatFuncField& o) const { return p_ == o.p_ && var_ == o.var_; }

 private:
  value_type normalize(fp_poly::Poly num, fp_poly::Poly den) const {
    fp_poly::trim(num);
    if (num.empty()) return {};
    auto g = fp_poly::gcd(num, den, p_);
    if (g.size() > 1) {
      num = fp_poly::divmod(num, g, p_).first;
      den = fp_poly::divmod(den, g, p_).first;
    }
    std::uint32_t lc = static_cast<std::uint32_t>(inv_mod(den.back(), p_));
    num = fp_poly::scale(num, lc, p_);
    den = fp_poly::scale(den, lc, p_);
    if (fp_poly::degree(num) > degree_cap_ || fp_poly::degree(den) > degree_cap_)
      throw resource_error("rational function degree exceeds cap " + std::to_string(degree_cap_));
    return {std::move(num), std::move(den)};
  }

  std::uint32_t p_;
  std::string var_;
  int degree_cap_;
};

}  // namespace wittalg

#endif  // WITTALG_SCALARS_RATFUNC_HPP
