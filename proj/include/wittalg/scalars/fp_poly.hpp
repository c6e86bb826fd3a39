#ifndef WITTALG_SCALARS_FP_POLY_HPP
#define WITTALG_SCALARS_FP_POLY_HPP

// Dense univariate polynomials over F_p, coefficients low degree first, no trailing zeros.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "wittalg/scalars/combinatorics.hpp"

namespace wittalg::fp_poly {

using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly add(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

inline Poly neg(const Poly& a, std::uint32_t p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] ? p - a[i] : 0;
  return r;
}

inline Poly sub(const Poly& a, const Poly& b, std::uint32_t p) { return add(a, neg(b, p), p); }

inline Poly scale(const Poly& a, std::uint32_t c, std::uint32_t p) {
  if (c % p == 0) return {};
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint32_t>(std::uint64_t{a[i]} * c % p);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  Poly r(acc.begin(), acc.end());
  trim(r);
  return r;
}

/// Quotient and remainder; b must be nonzero.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) return {{}, a};
  std::uint64_t lead_inv = inv_mod(b.back(), p);
  Poly q(a.size() - b.size() + 1, 0);
  const long db = static_cast<long>(b.size()) - 1;
  for (long k = static_cast<long>(a.size()) - 1; k >= db; --k) {
    std::uint32_t c = static_cast<std::uint32_t>(a[static_cast<std::size_t>(k)] * lead_inv % p);
    std::size_t shift = static_cast<std::size_t>(k - db);
    q[shift] = c;
    if (c)
      for (std::size_t j = 0; j < b.size(); ++j)
        a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + std::uint64_t{p - c} * b[j]) % p);
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline Poly mod(const Poly& a, const Poly& b, std::uint32_t p) { return divmod(a, b, p).second; }

inline Poly monic(const Poly& a, std::uint32_t p) {
  if (a.empty()) return a;
  return scale(a, static_cast<std::uint32_t>(inv_mod(a.back(), p)), p);
}

inline Poly gcd(Poly a, Poly b, std::uint32_t p) {
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

inline Poly derivative(const Poly& a, std::uint32_t p) {
  Poly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(static_cast<std::uint32_t>(std::uint64_t{a[i]} * (i % p) % p));
  trim(r);
  return r;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) { return mod(mul(a, b, p), m, p); }

inline Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly r{1};
  r = mod(r, m, p);
  base = mod(base, m, p);
  while (e) {
    if (e & 1) r = mulmod(r, base, m, p);
    base = mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

/// Rabin-style irreducibility test for a monic f of degree k >= 1.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  int k = degree(f);
  if (k < 1) return false;
  if (k == 1) return true;
  Poly x{0, 1};
  Poly xq = x;
  for (int i = 1; i <= k / 2; ++i) {
    xq = powmod(xq, p, f, p);
    Poly g = gcd(f, sub(xq, x, p), p);
    if (degree(g) > 0) return false;
  }
  return true;
}

/// The lexicographically least monic irreducible polynomial of degree k over F_p,
/// ordering by the coefficient list from the constant term upward.
inline Poly least_irreducible(int k, std::uint32_t p) {
  std::uint64_t count = ipow(p, static_cast<std::uint64_t>(k));
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f(static_cast<std::size_t>(k) + 1, 0);
    std::uint64_t t = idx;
    // idx enumerates (c_0, c_1, ..., c_{k-1}) with c_0 most significant
    for (int i = k - 1; i >= 0; --i) {
      f[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    f[static_cast<std::size_t>(k)] = 1;
    if (is_irreducible(f, p)) return f;
  }
  return {};
}

inline std::uint32_t eval(const Poly& a, std::uint32_t x, std::uint32_t p) {
  std::uint64_t r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = (r * x + a[i]) % p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace wittalg::fp_poly

#endif  // WITTALG_SCALARS_FP_POLY_HPP
