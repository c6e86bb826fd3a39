#ifndef WITTALG_AUTOS_SUBGROUPS_HPP
#define WITTALG_AUTOS_SUBGROUPS_HPP

#include <vector>

#include "wittalg/autos/morphism.hpp"
#include "wittalg/lie/derivation.hpp"

namespace wittalg {

/// The truncated exponential sum_{j<p} c^j (d_i^{p^s})^j / j! as an operator on A(m;n).
template <ScalarRing R>
Matrix<R> artin_hasse_operator(const DPAlgebra<R>& a, std::size_t i, std::size_t s, const typename R::value_type& c) {
  const auto& ring = a.ring();
  auto step = mat::power(ring, a.monomial_algebra().partial(i), ipow(a.p(), s));
  auto term = mat::identity(ring, a.dim());
  auto sum = term;
  auto fact = ring.one();
  for (std::uint32_t j = 1; j < a.p(); ++j) {
    term = mat::scale(ring, c, mat::mul(ring, step, term));
    fact = ring.mul(fact, ring.from_int(j));
    sum = mat::add(ring, sum, mat::scale(ring, inverse_or_throw(ring, fact), term));
  }
  return sum;
}

/// E_p(c d_i^{p^s}) for c with c^p = 0, built from its generator images and checked
/// against the operator series.
template <ScalarRing R>
AlgebraMorphism<R> artin_hasse_auto(const DPAlgebra<R>& a, std::size_t i, std::size_t s,
                                    const typename R::value_type& c) {
  const auto& ring = a.ring();
  if (i >= a.m() || s >= static_cast<std::size_t>(a.n()[i])) throw invalid_argument("artin_hasse_auto: generator out of range");
  if (!ring.is_zero(ring_pow(ring, c, a.p()))) throw not_p_nilpotent(i, s);
  auto op = artin_hasse_operator(a, i, s, c);
  typename AlgebraMorphism<R>::Images images(a.m());
  for (std::size_t j = 0; j < a.m(); ++j)
    for (int u = 0; u < a.n()[j]; ++u)
      images[j].push_back(mat::column(op, a.generator_index(j, static_cast<std::size_t>(u))));
  auto phi = AlgebraMorphism<R>::from_generator_images(a, std::move(images));
  if (!mat::equal(ring, phi.matrix(), op)) throw std::logic_error("artin_hasse_auto: series is not multiplicative");
  return phi;
}

/// phi(a) = prod_i E_p(a_i0 d_i) E_p(a_i1 d_i^p) ... with i and s ascending (the factors commute).
template <ScalarRing R>
AlgebraMorphism<R> g_minus_point(const DPAlgebra<R>& a, const WittKernelPoint<R>& point) {
  const auto& ring = a.ring();
  if (point.entries.size() != a.m()) throw invalid_argument("g_minus_point: wrong number of variables");
  auto m = mat::identity(ring, a.dim());
  for (std::size_t i = 0; i < a.m(); ++i) {
    if (point.entries[i].size() != static_cast<std::size_t>(a.n()[i]))
      throw invalid_argument("g_minus_point: wrong number of coordinates");
    for (std::size_t s = 0; s < point.entries[i].size(); ++s) {
      const auto& c = point.entries[i][s];
      if (!ring.is_zero(ring_pow(ring, c, a.p()))) throw not_p_nilpotent(i, s);
      if (ring.is_zero(c)) continue;
      m = mat::mul(ring, m, artin_hasse_operator(a, i, s, c));
    }
  }
  typename AlgebraMorphism<R>::Images images(a.m());
  for (std::size_t j = 0; j < a.m(); ++j)
    for (int u = 0; u < a.n()[j]; ++u) images[j].push_back(mat::column(m, a.generator_index(j, static_cast<std::size_t>(u))));
  return AlgebraMorphism<R>::from_generator_images(a, std::move(images));
}

/// The linear substitution x_j -> sum_i M_ij x_i, extended by x_j^(p^s) -> gamma_{p^s}(image).
template <ScalarRing R>
AlgebraMorphism<R> g_zero_point(const DPAlgebra<R>& a, const Matrix<R>& M) {
  const auto& ring = a.ring();
  if (M.rows != a.m() || M.cols != a.m()) throw invalid_argument("g_zero_point: matrix must be m x m");
  if (!wittalg::inverse(ring, M)) throw not_invertible("g_zero_point: matrix is not invertible");
  for (std::size_t i = 0; i < a.m(); ++i)
    for (std::size_t j = 0; j < a.m(); ++j)
      if (a.n()[i] < a.n()[j] && !ring.is_zero(M(i, j)))
        throw invalid_argument("g_zero_point: entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                               ") must vanish since n_i < n_j");
  const auto& mono = a.monomial_algebra();
  typename AlgebraMorphism<R>::Images images(a.m());
  for (std::size_t j = 0; j < a.m(); ++j) {
    auto lin = mono.zero();
    for (std::size_t i = 0; i < a.m(); ++i) lin[a.generator_index(i, 0)] = M(i, j);
    for (int s = 0; s < a.n()[j]; ++s) images[j].push_back(a.gamma_dense(lin, ipow(a.p(), static_cast<std::uint64_t>(s))));
  }
  return AlgebraMorphism<R>::from_generator_images(a, std::move(images));
}

/// phi o D o phi^{-1}.
template <ScalarRing R>
Matrix<R> conjugate_operator(const AlgebraMorphism<R>& phi, const Matrix<R>& d) {
  const auto& ring = phi.algebra().ring();
  return mat::mul(ring, mat::mul(ring, phi.matrix(), d), phi.inverse().matrix());
}

template <ScalarRing R>
bool in_witt_span(const DPAlgebra<R>& a, const Matrix<R>& op) {
  try {
    Derivation<R>::from_matrix(a.monomial_algebra(), op);
    return true;
  } catch (const not_a_derivation&) {
    return false;
  }
}

/// phi_*(D) lies in W(m;n) (x) R for every D in W. Since W (x) R is an A (x) R-module and
/// phi_*(f D) = phi(f) phi_*(D), the partials d_i suffice; `exhaustive` checks every
/// basis element x^(a) d_i instead.
template <ScalarRing R>
bool is_derivation_automorphism(const AlgebraMorphism<R>& phi, bool exhaustive = false) {
  const auto& a = phi.algebra();
  const auto& ring = a.ring();
  const auto& mono = a.monomial_algebra();
  auto inv = wittalg::inverse(ring, phi.matrix());
  if (!inv) return false;
  for (std::size_t i = 0; i < a.m(); ++i) {
    std::size_t count = exhaustive ? a.dim() : 1;
    for (std::size_t idx = 0; idx < count; ++idx) {
      auto d = mat::mul(ring, mono.mult_matrix(mono.basis(idx)), mono.partial(i));
      auto conj = mat::mul(ring, mat::mul(ring, phi.matrix(), d), *inv);
      if (!in_witt_span(a, conj)) return false;
    }
  }
  return true;
}

struct DPCheck {
  bool preserves_ideal = false;
  bool commutes_with_gamma = false;
  std::string reason;
  bool ok() const { return preserves_ideal && commutes_with_gamma; }
};

/// A(m;n') with n'_i = max(n_i, 2 n_i - 1), large enough to hold gamma_{p^s}(f) without
/// truncation for f in A(m;n) and p^s < p^{n_i}.
template <ScalarRing R>
struct DPAmbient {
  DPAlgebra<R> big;
  std::vector<std::size_t> embed;  // small index -> big index

  explicit DPAmbient(const DPAlgebra<R>& a) : big(a.p(), widened(a.n()), a.ring()) {
    for (std::size_t idx = 0; idx < a.dim(); ++idx) embed.push_back(big.index_of(a.multi_index(idx)));
  }
  Vec<R> lift(const Vec<R>& f) const {
    auto out = big.monomial_algebra().zero();
    for (std::size_t idx = 0; idx < f.size(); ++idx) out[embed[idx]] = f[idx];
    return out;
  }

 private:
  static std::vector<int> widened(std::vector<int> n) {
    for (auto& v : n) v = std::max(v, 2 * v - 1);
    return n;
  }
};

/// phi(I) in I, and phi(x^(a)^(r)) = phi(x^(a))^(r) for r = p^s and every basis monomial
/// x^(a) of I with x^(ra) inside the truncation. The right side is computed without
/// truncation, so images whose divided powers escape A(m;n) are rejected.
template <ScalarRing R>
DPCheck dp_automorphism_check(const AlgebraMorphism<R>& phi) {
  DPCheck res;
  const auto& a = phi.algebra();
  const auto& ring = a.ring();
  const auto& mono = a.monomial_algebra();
  for (std::size_t idx = 1; idx < a.dim(); ++idx)
    if (!ring.is_zero(phi.matrix()(0, idx))) {
      res.reason = "image of " + a.monomial_label(idx) + " has nonzero constant term";
      return res;
    }
  res.preserves_ideal = true;
  std::uint64_t max_bound = 0;
  for (std::size_t i = 0; i < a.m(); ++i) max_bound = std::max(max_bound, a.bound(i));
  if (max_bound > a.p()) {
    DPAmbient<R> amb(a);
    const auto& big = amb.big.monomial_algebra();
    for (std::size_t u = 1; u < a.dim(); ++u) {
      auto pf = amb.lift(phi.apply(mono.basis(u)));
      for (std::uint64_t r = a.p(); r < max_bound; r *= a.p()) {
        bool fits = true;
        for (std::size_t i = 0; i < a.m(); ++i) fits = fits && a.multi_index(u)[i] * r < a.bound(i);
        if (!fits) continue;
        auto lhs = amb.lift(phi.apply(a.gamma_monomial(u, ring.one(), r)));
        if (!big.equal(lhs, amb.big.gamma_dense(pf, r))) {
          res.reason = "gamma_" + std::to_string(r) + " not preserved on " + a.monomial_label(u);
          return res;
        }
      }
    }
  }
  res.commutes_with_gamma = true;
  return res;
}

template <ScalarRing R>
bool is_dp_automorphism(const AlgebraMorphism<R>& phi) {
  return dp_automorphism_check(phi).ok();
}

/// phi_*(D) = phi o D o phi^{-1} in coefficient form.
template <ScalarRing R>
Derivation<R> pushforward(const AlgebraMorphism<R>& phi, const Derivation<R>& d) {
  if (!is_derivation_automorphism(phi)) throw not_derivation_automorphism("pushforward: not a derivation-automorphism");
  return Derivation<R>::from_matrix(phi.algebra().monomial_algebra(), conjugate_operator(phi, d.matrix()));
}

}  // namespace wittalg

#endif  // WITTALG_AUTOS_SUBGROUPS_HPP
