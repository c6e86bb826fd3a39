#ifndef WITTALG_FIELD_POLY_HPP
#define WITTALG_FIELD_POLY_HPP

// Univariate polynomials over an arbitrary field context (low degree first),
// characteristic polynomials, separability and root finding.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "wittalg/linalg.hpp"
#include "wittalg/scalars/ring.hpp"

namespace wittalg::field_poly {

template <ScalarRing F>
using Poly = std::vector<typename F::value_type>;

template <ScalarRing F>
void trim(const F& f, Poly<F>& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <ScalarRing F>
int degree(const Poly<F>& a) {
  return static_cast<int>(a.size()) - 1;
}

template <ScalarRing F>
Poly<F> add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  trim(f, r);
  return r;
}

template <ScalarRing F>
Poly<F> sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> nb(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) nb[i] = f.neg(b[i]);
  return add(f, a, nb);
}

template <ScalarRing F>
Poly<F> mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(f, r);
  return r;
}

template <ScalarRing F>
std::pair<Poly<F>, Poly<F>> divmod(const F& f, Poly<F> a, const Poly<F>& b) {
  if (a.size() < b.size()) return {{}, a};
  auto lead_inv = *f.inverse(b.back());
  Poly<F> q(a.size() - b.size() + 1, f.zero());
  const long db = static_cast<long>(b.size()) - 1;
  for (long k = static_cast<long>(a.size()) - 1; k >= db; --k) {
    auto c = f.mul(a[static_cast<std::size_t>(k)], lead_inv);
    std::size_t shift = static_cast<std::size_t>(k - db);
    q[shift] = c;
    if (!f.is_zero(c))
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = f.sub(a[shift + j], f.mul(c, b[j]));
  }
  trim(f, a);
  trim(f, q);
  return {q, a};
}

template <ScalarRing F>
Poly<F> monic(const F& f, Poly<F> a) {
  if (a.empty()) return a;
  auto inv = *f.inverse(a.back());
  for (auto& c : a) c = f.mul(inv, c);
  return a;
}

template <ScalarRing F>
Poly<F> gcd(const F& f, Poly<F> a, Poly<F> b) {
  trim(f, a);
  trim(f, b);
  while (!b.empty()) {
    auto r = divmod(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

template <ScalarRing F>
Poly<F> derivative(const F& f, const Poly<F>& a) {
  Poly<F> r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(f.mul(f.from_int(static_cast<std::int64_t>(i)), a[i]));
  trim(f, r);
  return r;
}

template <ScalarRing F>
typename F::value_type eval(const F& f, const Poly<F>& a, const typename F::value_type& x) {
  auto r = f.zero();
  for (std::size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
  return r;
}

template <ScalarRing F>
bool is_separable(const F& f, const Poly<F>& a) {
  auto g = gcd(f, a, derivative(f, a));
  return degree<F>(g) == 0;
}

/// Characteristic polynomial det(T - M), monic, via reduction to Hessenberg form.
template <ScalarRing F>
Poly<F> charpoly(const F& f, Matrix<F> h) {
  const std::size_t n = h.rows;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && f.is_zero(h(i, m - 1))) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    auto inv = *f.inverse(h(m, m - 1));
    for (std::size_t j = m + 1; j < n; ++j) {
      if (f.is_zero(h(j, m - 1))) continue;
      auto u = f.mul(h(j, m - 1), inv);
      for (std::size_t c = 0; c < n; ++c) h(j, c) = f.sub(h(j, c), f.mul(u, h(m, c)));
      for (std::size_t r = 0; r < n; ++r) h(r, m) = f.add(h(r, m), f.mul(u, h(r, j)));
    }
  }
  std::vector<Poly<F>> p(n + 1);
  p[0] = {f.one()};
  for (std::size_t k = 1; k <= n; ++k) {
    Poly<F> lin{f.neg(h(k - 1, k - 1)), f.one()};
    p[k] = mul(f, lin, p[k - 1]);
    auto t = f.one();
    for (std::size_t i = 1; i < k; ++i) {
      t = f.mul(t, h(k - i, k - i - 1));
      auto c = f.mul(t, h(k - i - 1, k - 1));
      if (f.is_zero(c)) continue;
      Poly<F> scaled = p[k - i - 1];
      for (auto& x : scaled) x = f.mul(c, x);
      p[k] = sub(f, p[k], scaled);
    }
  }
  return p[n];
}

template <ScalarRing F>
Poly<F> powmod(const F& f, Poly<F> base, std::uint64_t e, const Poly<F>& m) {
  Poly<F> r{f.one()};
  r = divmod(f, r, m).second;
  base = divmod(f, base, m).second;
  while (e) {
    if (e & 1) r = divmod(f, mul(f, r, base), m).second;
    e >>= 1;
    if (e) base = divmod(f, mul(f, base, base), m).second;
  }
  return r;
}

/// Degree of the splitting field over a finite field F_q of a squarefree polynomial
/// (lcm of the irreducible factor degrees, by distinct-degree factorization).
template <FiniteFieldRing F>
std::uint64_t splitting_degree(const F& f, Poly<F> a) {
  a = monic(f, a);
  std::uint64_t lcm = 1;
  Poly<F> x{f.zero(), f.one()};
  Poly<F> xq = x;
  for (int d = 1; degree<F>(a) > 0; ++d) {
    xq = powmod(f, xq, f.size(), a);
    auto g = gcd(f, a, sub(f, xq, x));
    if (degree<F>(g) > 0) {
      lcm = std::lcm(lcm, static_cast<std::uint64_t>(d));
      a = divmod(f, a, g).first;
      xq = divmod(f, xq, a).second;
    }
    if (d > 4096) break;
  }
  return lcm;
}

/// Roots in F of a polynomial over a finite field, in enumeration order (with multiplicity ignored).
template <FiniteFieldRing F>
std::vector<typename F::value_type> roots(const F& f, const Poly<F>& a) {
  std::vector<typename F::value_type> out;
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    auto x = f.element(i);
    if (f.is_zero(eval(f, a, x))) out.push_back(x);
  }
  return out;
}

}  // namespace wittalg::field_poly

#endif  // WITTALG_FIELD_POLY_HPP
