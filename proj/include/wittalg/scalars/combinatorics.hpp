#ifndef WITTALG_SCALARS_COMBINATORICS_HPP
#define WITTALG_SCALARS_COMBINATORICS_HPP

// Binomial and factorial residues modulo a prime without forming big factorials.

#include <cstdint>
#include <span>
#include <vector>

#include "wittalg/errors.hpp"

namespace wittalg {

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p prime, a != 0 mod p
  return pow_mod(a, p - 2, p);
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Exponent of p in n! (Legendre).
inline std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t p) {
  std::uint64_t v = 0;
  while (n) {
    n /= p;
    v += n;
  }
  return v;
}

/// n! / p^{v_p(n!)} mod p, via n! = (-1)^{n/p} (n mod p)! (n/p)! p^{n/p} (mod p-adic units).
inline std::uint64_t factorial_unit_residue(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n) {
    std::uint64_t d = n % p;
    for (std::uint64_t k = 2; k <= d; ++k) r = r * k % p;
    n /= p;
    if (n & 1) r = (p - r) % p;
  }
  return r;
}

/// C(a,b) mod p via base-p digits.
inline std::uint64_t lucas_binomial(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (b > a) throw invalid_argument("lucas_binomial: b > a");
  std::uint64_t r = 1;
  while (b) {
    std::uint64_t ad = a % p, bd = b % p;
    if (bd > ad) return 0;
    // small binomial by factorial residues; ad < p so no p-divisibility
    std::uint64_t num = factorial_unit_residue(ad, p);
    std::uint64_t den = factorial_unit_residue(bd, p) * factorial_unit_residue(ad - bd, p) % p;
    r = r * num % p * inv_mod(den, p) % p;
    a /= p;
    b /= p;
  }
  return r;
}

/// Residue mod p of prod(num[i]!) / prod(den[i]!), which must be an integer.
/// Returns 0 when the quotient is divisible by p.
inline std::uint64_t factorial_ratio_mod(std::span<const std::uint64_t> num,
                                         std::span<const std::uint64_t> den, std::uint64_t p) {
  std::int64_t v = 0;
  std::uint64_t u = 1, w = 1;
  for (auto n : num) {
    v += static_cast<std::int64_t>(legendre_valuation(n, p));
    u = u * factorial_unit_residue(n, p) % p;
  }
  for (auto n : den) {
    v -= static_cast<std::int64_t>(legendre_valuation(n, p));
    w = w * factorial_unit_residue(n, p) % p;
  }
  if (v < 0) throw invalid_argument("factorial_ratio_mod: quotient is not an integer");
  if (v > 0) return 0;
  return u * inv_mod(w, p) % p;
}

/// (r a)! / (r! (a!)^r) mod p: the coefficient in gamma_r(x^(a)) = c x^(ra).
inline std::uint64_t dp_power_coefficient(std::uint64_t r, std::uint64_t a, std::uint64_t p) {
  std::int64_t v = static_cast<std::int64_t>(legendre_valuation(r * a, p)) -
                   static_cast<std::int64_t>(legendre_valuation(r, p)) -
                   static_cast<std::int64_t>(r * legendre_valuation(a, p));
  if (v > 0) return 0;
  std::uint64_t w = factorial_unit_residue(r, p) * pow_mod(factorial_unit_residue(a, p), r, p) % p;
  return factorial_unit_residue(r * a, p) * inv_mod(w, p) % p;
}

/// Base-p digits, least significant first, padded to `width` if given.
inline std::vector<std::uint64_t> base_p_digits(std::uint64_t n, std::uint64_t p, std::size_t width = 0) {
  std::vector<std::uint64_t> d;
  while (n) {
    d.push_back(n % p);
    n /= p;
  }
  if (d.size() < width) d.resize(width, 0);
  return d;
}

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace wittalg

#endif  // WITTALG_SCALARS_COMBINATORICS_HPP
