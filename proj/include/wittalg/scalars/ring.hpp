#ifndef WITTALG_SCALARS_RING_HPP
#define WITTALG_SCALARS_RING_HPP

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wittalg/errors.hpp"

namespace wittalg {

/// A commutative scalar ring context: values are plain data, all arithmetic goes
/// through the (immutable, copyable) ring object.
template <class R>
concept ScalarRing = requires(const R& r, const typename R::value_type& a, std::int64_t n) {
  typename R::value_type;
  { r.characteristic() } -> std::convertible_to<std::uint32_t>;
  { r.is_field() } -> std::convertible_to<bool>;
  { r.zero() } -> std::same_as<typename R::value_type>;
  { r.one() } -> std::same_as<typename R::value_type>;
  { r.from_int(n) } -> std::same_as<typename R::value_type>;
  { r.add(a, a) } -> std::same_as<typename R::value_type>;
  { r.sub(a, a) } -> std::same_as<typename R::value_type>;
  { r.neg(a) } -> std::same_as<typename R::value_type>;
  { r.mul(a, a) } -> std::same_as<typename R::value_type>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { r.equal(a, a) } -> std::convertible_to<bool>;
  { r.is_unit(a) } -> std::convertible_to<bool>;
  { r.inverse(a) } -> std::same_as<std::optional<typename R::value_type>>;
  { r.to_string(a) } -> std::convertible_to<std::string>;
  { r.to_json(a) } -> std::convertible_to<nlohmann::json>;
  { r.name() } -> std::convertible_to<std::string>;
};

/// Finite fields additionally enumerate their elements.
template <class R>
concept FiniteFieldRing = ScalarRing<R> && requires(const R& r, std::uint64_t i) {
  { r.size() } -> std::convertible_to<std::uint64_t>;
  { r.element(i) } -> std::same_as<typename R::value_type>;
};

template <ScalarRing R>
typename R::value_type ring_pow(const R& ring, typename R::value_type a, std::uint64_t e) {
  auto r = ring.one();
  while (e) {
    if (e & 1) r = ring.mul(r, a);
    e >>= 1;
    if (e) a = ring.mul(a, a);
  }
  return r;
}

template <ScalarRing R>
typename R::value_type inverse_or_throw(const R& ring, const typename R::value_type& a) {
  auto inv = ring.inverse(a);
  if (!inv) throw not_invertible("element " + ring.to_string(a) + " is not a unit");
  return *inv;
}

/// Coordinates a_{is} of a point of prod_i W_{n_i(1)}(R): every entry satisfies a^p = 0.
template <ScalarRing R>
struct WittKernelPoint {
  using value_type = typename R::value_type;
  std::vector<std::vector<value_type>> entries;  // entries[i][s], s < n_i

  const value_type& at(std::size_t i, std::size_t s) const { return entries[i][s]; }
};

template <ScalarRing R>
WittKernelPoint<R> validate_witt_kernel_point(const R& ring,
                                              std::vector<std::vector<typename R::value_type>> a,
                                              const std::vector<int>& n) {
  if (a.size() != n.size()) throw invalid_argument("kernel point: wrong number of variables");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != static_cast<std::size_t>(n[i]))
      throw invalid_argument("kernel point: wrong length for variable " + std::to_string(i));
    for (std::size_t s = 0; s < a[i].size(); ++s)
      if (!ring.is_zero(ring_pow(ring, a[i][s], ring.characteristic()))) throw not_p_nilpotent(i, s);
  }
  return WittKernelPoint<R>{std::move(a)};
}

template <ScalarRing R>
WittKernelPoint<R> negate(const R& ring, WittKernelPoint<R> a) {
  for (auto& row : a.entries)
    for (auto& v : row) v = ring.neg(v);
  return a;
}

}  // namespace wittalg

#endif  // WITTALG_SCALARS_RING_HPP
