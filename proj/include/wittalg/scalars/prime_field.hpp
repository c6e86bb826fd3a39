#ifndef WITTALG_SCALARS_PRIME_FIELD_HPP
#define WITTALG_SCALARS_PRIME_FIELD_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include <nlohmann/json.hpp>

#include "wittalg/errors.hpp"
#include "wittalg/scalars/combinatorics.hpp"

namespace wittalg {

/// The prime field F_p. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
  }

  std::uint32_t characteristic() const { return p_; }
  static constexpr bool is_field() { return true; }
  std::uint64_t size() const { return p_; }
  std::string name() const { return "F" + std::to_string(p_); }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  /// Enumerates the field: element(i) for i < size().
  value_type element(std::uint64_t i) const { return static_cast<value_type>(i % p_); }
  std::uint64_t index_of(value_type a) const { return a; }

  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  bool is_unit(value_type a) const { return a != 0; }
  std::optional<value_type> inverse(value_type a) const {
    if (a == 0) return std::nullopt;
    return static_cast<value_type>(inv_mod(a, p_));
  }
  /// Unique p-th root; Frobenius is the identity on F_p.
  std::optional<value_type> pth_root(value_type a) const { return a; }

  template <class Rng>
  value_type random(Rng& rng) const {
    return static_cast<value_type>(std::uniform_int_distribution<std::uint32_t>(0, p_ - 1)(rng));
  }

  std::string to_string(value_type a) const { return std::to_string(a); }
  nlohmann::json to_json(value_type a) const { return a; }
  value_type from_json(const nlohmann::json& j) const {
    if (!j.is_number_integer()) throw invalid_argument("F_p element must be an integer");
    return from_int(j.get<std::int64_t>());
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace wittalg

#endif  // WITTALG_SCALARS_PRIME_FIELD_HPP
