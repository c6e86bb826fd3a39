#ifndef WITTALG_LIE_WITT_HPP
#define WITTALG_LIE_WITT_HPP

#include <stdexcept>
#include <vector>

#include "wittalg/dpalg/dp_algebra.hpp"
#include "wittalg/lie/derivation.hpp"
#include "wittalg/lie/lie_data.hpp"

namespace wittalg {

/// Index of x^(a) d_i in the Witt algebra basis (variable-major, then monomial order).
template <ScalarRing R>
std::size_t witt_index(const DPAlgebra<R>& a, std::size_t i, std::size_t monomial) {
  return i * a.dim() + monomial;
}

/// The operator x^(a) d_i on A(m;n).
template <ScalarRing R>
Matrix<R> witt_basis_operator(const DPAlgebra<R>& a, std::size_t i, std::size_t monomial) {
  const auto& mono = a.monomial_algebra();
  return mat::mul(a.ring(), mono.mult_matrix(mono.basis(monomial)), mono.partial(i));
}

/// Coordinates in the Witt basis of the special derivation sum_i f_i d_i.
template <ScalarRing R>
Vec<R> witt_coordinates(const DPAlgebra<R>& a, const std::vector<Vec<R>>& coeffs) {
  Vec<R> v;
  for (const auto& f : coeffs) v.insert(v.end(), f.begin(), f.end());
  return v;
}

/// W(m;n) over R: structure constants come from commutators of the operators
/// x^(a) d_i on A(m;n), read off on the coordinates x_k.
template <ScalarRing R>
LieData<R> witt_algebra(const DPAlgebra<R>& a, bool allow_small_p = false) {
  if (a.p() <= 3 && !allow_small_p) throw invalid_argument("witt_algebra: characteristic must exceed 3");
  const auto& ring = a.ring();
  const auto& mono = a.monomial_algebra();
  std::size_t m = a.m(), na = a.dim(), d = m * na;
  std::vector<Matrix<R>> ops;
  ops.reserve(d);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t idx = 0; idx < na; ++idx) ops.push_back(witt_basis_operator(a, i, idx));
  std::vector<std::size_t> coord(m);
  for (std::size_t k = 0; k < m; ++k) coord[k] = mono.coordinate(k);
  // images[b][k] = E_b(x_k)
  std::vector<std::vector<Vec<R>>> images(d);
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t k = 0; k < m; ++k) images[b].push_back(mat::column(ops[b], coord[k]));
  auto L = LieData<R>::from_brackets(ring, d, [&](std::size_t u, std::size_t v) {
    Vec<R> out(d, ring.zero());
    for (std::size_t k = 0; k < m; ++k) {
      auto f = mono.sub(mat::apply(ring, ops[u], images[v][k]), mat::apply(ring, ops[v], images[u][k]));
      for (std::size_t idx = 0; idx < na; ++idx) out[k * na + idx] = f[idx];
    }
    return out;
  });
  std::vector<std::vector<int>> grading;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t idx = 0; idx < na; ++idx) {
      std::vector<int> g(m);
      for (std::size_t v = 0; v < m; ++v) g[v] = static_cast<int>(a.multi_index(idx)[v]);
      g[i] -= 1;
      grading.push_back(std::move(g));
      auto ml = a.monomial_label(idx);
      L.labels.push_back((ml == "1" ? std::string() : ml + "*") + "d" + std::to_string(i + 1));
    }
  L.grading = std::move(grading);
  L.embedding = std::move(ops);
  L.parameters = {{"p", a.p()}, {"m", m}, {"n", a.n()}};
  if (d <= 64 && !L.satisfies_jacobi()) throw std::logic_error("witt_algebra: Jacobi identity failed");
  return L;
}

template <ScalarRing R>
LieData<R> witt_algebra(std::uint32_t p, std::vector<int> n, R ring, bool allow_small_p = false) {
  return witt_algebra(DPAlgebra<R>(p, std::move(n), std::move(ring)), allow_small_p);
}

}  // namespace wittalg

#endif  // WITTALG_LIE_WITT_HPP
