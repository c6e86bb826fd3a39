#ifndef WITTALG_AUTOS_TRIANGULATE_HPP
#define WITTALG_AUTOS_TRIANGULATE_HPP

#include <random>
#include <vector>

#include <nlohmann/json.hpp>

#include "wittalg/autos/subgroups.hpp"

namespace wittalg {

/// phi = plus o g_zero_point(zero) o g_minus_point(minus).
template <ScalarRing R>
struct TriangularDecomposition {
  AlgebraMorphism<R> plus;
  Matrix<R> zero;
  WittKernelPoint<R> minus;

  AlgebraMorphism<R> reassemble() const {
    const auto& a = plus.algebra();
    return plus.after(g_zero_point(a, zero)).after(g_minus_point(a, minus));
  }

  bool same_as(const TriangularDecomposition& o) const {
    const auto& ring = plus.algebra().ring();
    if (!plus.equal(o.plus) || !mat::equal(ring, zero, o.zero)) return false;
    if (minus.entries.size() != o.minus.entries.size()) return false;
    for (std::size_t i = 0; i < minus.entries.size(); ++i) {
      if (minus.entries[i].size() != o.minus.entries[i].size()) return false;
      for (std::size_t s = 0; s < minus.entries[i].size(); ++s)
        if (!ring.equal(minus.entries[i][s], o.minus.entries[i][s])) return false;
    }
    return true;
  }

  /// {minus: [[a_is]], zero: row-major rows, plus: generator images}
  nlohmann::json to_json() const {
    const auto& ring = plus.algebra().ring();
    auto jm = nlohmann::json::array();
    for (const auto& row : minus.entries) {
      auto r = nlohmann::json::array();
      for (const auto& v : row) r.push_back(ring.to_json(v));
      jm.push_back(r);
    }
    auto jz = nlohmann::json::array();
    for (std::size_t i = 0; i < zero.rows; ++i) {
      auto r = nlohmann::json::array();
      for (std::size_t j = 0; j < zero.cols; ++j) r.push_back(ring.to_json(zero(i, j)));
      jz.push_back(r);
    }
    return {{"minus", jm}, {"zero", jz}, {"plus", plus.to_json()}};
  }
};

/// phi(x_j) = x_j modulo monomials of total degree >= 2.
template <ScalarRing R>
bool fixes_coordinates_to_first_order(const AlgebraMorphism<R>& phi) {
  const auto& a = phi.algebra();
  const auto& ring = a.ring();
  for (std::size_t j = 0; j < a.m(); ++j) {
    const auto& img = phi.image(j, 0);
    for (std::size_t idx = 0; idx < a.dim(); ++idx) {
      if (a.total_degree(idx) >= 2) continue;
      auto expect = idx == a.generator_index(j, 0) ? ring.one() : ring.zero();
      if (!ring.equal(img[idx], expect)) return false;
    }
  }
  return true;
}

struct TriangulateOptions {
  bool require_derivation_automorphism = true;
  bool check_plus_dp = true;
};

template <ScalarRing R>
TriangularDecomposition<R> triangulate(const AlgebraMorphism<R>& phi, TriangulateOptions opts = {}) {
  const auto& a = phi.algebra();
  const auto& ring = a.ring();
  if (opts.require_derivation_automorphism && !is_derivation_automorphism(phi))
    throw not_derivation_automorphism("triangulate: not a derivation-automorphism");

  std::vector<std::vector<typename R::value_type>> entries(a.m());
  for (std::size_t i = 0; i < a.m(); ++i)
    for (int s = 0; s < a.n()[i]; ++s) entries[i].push_back(phi.image(i, static_cast<std::size_t>(s))[0]);
  WittKernelPoint<R> minus;
  try {
    minus = validate_witt_kernel_point(ring, std::move(entries), a.n());
  } catch (const not_p_nilpotent&) {
    throw internal_decomposition_failure("constant terms are not p-nilpotent");
  }

  auto nonneg = phi.after(g_minus_point(a, negate(ring, minus)));
  Matrix<R> zero(ring, a.m(), a.m());
  for (std::size_t i = 0; i < a.m(); ++i)
    for (std::size_t j = 0; j < a.m(); ++j) zero(i, j) = nonneg.image(j, 0)[a.generator_index(i, 0)];

  AlgebraMorphism<R> linear = [&] {
    try {
      return g_zero_point(a, zero);
    } catch (const not_invertible&) {
      throw internal_decomposition_failure("linear part is not invertible");
    }
  }();
  auto plus = nonneg.after(linear.inverse());
  TriangularDecomposition<R> dec{plus, zero, minus};

  if (!dec.reassemble().equal(phi)) throw internal_decomposition_failure("reassembly differs from the input");
  if (!fixes_coordinates_to_first_order(plus)) throw internal_decomposition_failure("plus part is not the identity to first order");
  auto check = opts.check_plus_dp ? dp_automorphism_check(plus) : DPCheck{};
  if (opts.check_plus_dp && !check.ok()) throw internal_decomposition_failure("plus part: " + check.reason);
  if (!opts.check_plus_dp)
    for (std::size_t idx = 1; idx < a.dim(); ++idx)
      if (!ring.is_zero(plus.matrix()(0, idx))) throw internal_decomposition_failure("plus part does not preserve the augmentation ideal");
  return dec;
}

namespace detail {

template <class R>
concept HasNilpotents = requires(const R& r, std::mt19937_64& g) {
  { r.random_nilpotent(g) } -> std::same_as<typename R::value_type>;
};

template <ScalarRing R>
typename R::value_type random_scalar(const R& ring, std::mt19937_64& rng) {
  return ring.random(rng);
}

template <ScalarRing R>
typename R::value_type random_nilpotent(const R& ring, std::mt19937_64& rng) {
  if constexpr (HasNilpotents<R>)
    return ring.random_nilpotent(rng);
  else
    return ring.zero();
}

}  // namespace detail

/// x_i -> x_i + h_i with h_i a random combination of monomials of total degree >= 2
/// other than x_i^(p^s); higher generators follow as gamma_{p^s}(x_i + h_i). A term
/// x_i^(p^s) would push gamma_{p^{n_i - s}}(x_i + h_i) out of A(m;n).
template <ScalarRing R>
AlgebraMorphism<R> random_g_plus(const DPAlgebra<R>& a, std::mt19937_64& rng) {
  const auto& mono = a.monomial_algebra();
  auto pure_p_power = [&](std::size_t idx, std::size_t i) {
    auto e = a.multi_index(idx)[i];
    if (e != a.total_degree(idx)) return false;
    while (e % a.p() == 0) e /= a.p();
    return e == 1;
  };
  typename AlgebraMorphism<R>::Images images(a.m());
  for (std::size_t i = 0; i < a.m(); ++i) {
    auto img = mono.zero();
    img[a.generator_index(i, 0)] = a.ring().one();
    for (std::size_t idx = 1; idx < a.dim(); ++idx)
      if (a.total_degree(idx) >= 2 && !pure_p_power(idx, i)) img[idx] = detail::random_scalar(a.ring(), rng);
    for (int s = 0; s < a.n()[i]; ++s) images[i].push_back(a.gamma_dense(img, ipow(a.p(), static_cast<std::uint64_t>(s))));
  }
  return AlgebraMorphism<R>::from_generator_images(a, std::move(images));
}

/// A random matrix whose determinant is a unit (rejection sampling). Entry (i, j) is kept
/// zero when n_i < n_j so that the substitution preserves A(m;n).
template <ScalarRing R>
Matrix<R> random_invertible_matrix(const R& ring, std::size_t m, std::mt19937_64& rng,
                                   const std::vector<int>& n = {}) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Matrix<R> M(ring, m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (n.empty() || n[i] >= n[j]) M(i, j) = detail::random_scalar(ring, rng);
    if (wittalg::inverse(ring, M)) return M;
  }
  throw iteration_cap_exceeded("random_invertible_matrix");
}

template <ScalarRing R>
WittKernelPoint<R> random_kernel_point(const DPAlgebra<R>& a, std::mt19937_64& rng) {
  WittKernelPoint<R> pt;
  pt.entries.resize(a.m());
  for (std::size_t i = 0; i < a.m(); ++i)
    for (int s = 0; s < a.n()[i]; ++s) pt.entries[i].push_back(detail::random_nilpotent(a.ring(), rng));
  return pt;
}

template <ScalarRing R>
TriangularDecomposition<R> random_decomposition(const DPAlgebra<R>& a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto plus = random_g_plus(a, rng);
  auto zero = random_invertible_matrix(a.ring(), a.m(), rng, a.n());
  auto minus = random_kernel_point(a, rng);
  return {std::move(plus), std::move(zero), std::move(minus)};
}

/// plus o zero o minus for independently drawn random factors; deterministic per seed.
template <ScalarRing R>
AlgebraMorphism<R> random_derivation_automorphism(const DPAlgebra<R>& a, std::uint64_t seed) {
  return random_decomposition(a, seed).reassemble();
}

}  // namespace wittalg

#endif  // WITTALG_AUTOS_TRIANGULATE_HPP
