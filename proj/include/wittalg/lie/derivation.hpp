#ifndef WITTALG_LIE_DERIVATION_HPP
#define WITTALG_LIE_DERIVATION_HPP

#include <optional>
#include <random>
#include <vector>

#include "wittalg/dpalg/dp_algebra.hpp"
#include "wittalg/dpalg/monomial_algebra.hpp"
#include "wittalg/linalg.hpp"

namespace wittalg {

/// A derivation sum_i f_i d_i of a monomial algebra, where d_i are the carrier's
/// coordinate partials, together with its matrix on the monomial basis.
template <ScalarRing R>
class Derivation {
 public:
  Derivation(MonomialAlgebra<R> carrier, std::vector<Vec<R>> coefficients)
      : carrier_(std::move(carrier)), coeffs_(std::move(coefficients)) {
    if (coeffs_.size() != carrier_.variables()) throw invalid_argument("Derivation: one coefficient per variable");
    const auto& ring = carrier_.ring();
    matrix_ = Matrix<R>(ring, carrier_.dim(), carrier_.dim());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (carrier_.is_zero(coeffs_[i])) continue;
      matrix_ = mat::add(ring, matrix_, mat::mul(ring, carrier_.mult_matrix(coeffs_[i]), carrier_.partial(i)));
    }
  }

  /// Recovers the coefficient form of an operator; fails with not_a_derivation if the
  /// operator is not in the span of the partials.
  static Derivation from_matrix(MonomialAlgebra<R> carrier, const Matrix<R>& m) {
    std::vector<Vec<R>> coeffs;
    for (std::size_t i = 0; i < carrier.variables(); ++i) coeffs.push_back(mat::column(m, carrier.coordinate(i)));
    Derivation d(std::move(carrier), std::move(coeffs));
    if (!mat::equal(d.carrier_.ring(), d.matrix_, m))
      throw not_a_derivation("operator is not in the span of the coordinate derivations");
    return d;
  }

  static Derivation partial(MonomialAlgebra<R> carrier, std::size_t i) {
    std::vector<Vec<R>> coeffs(carrier.variables(), carrier.zero());
    coeffs.at(i) = carrier.one();
    return Derivation(std::move(carrier), std::move(coeffs));
  }

  const MonomialAlgebra<R>& carrier() const { return carrier_; }
  const std::vector<Vec<R>>& coefficients() const { return coeffs_; }
  const Vec<R>& coefficient(std::size_t i) const { return coeffs_[i]; }
  const Matrix<R>& matrix() const { return matrix_; }

  Vec<R> apply(const Vec<R>& f) const { return mat::apply(carrier_.ring(), matrix_, f); }

  /// f * D.
  Derivation scaled_by(const Vec<R>& f) const {
    std::vector<Vec<R>> c;
    for (auto& g : coeffs_) c.push_back(carrier_.mul(f, g));
    return Derivation(carrier_, std::move(c));
  }

  bool equal(const Derivation& o) const { return mat::equal(carrier_.ring(), matrix_, o.matrix_); }

 private:
  MonomialAlgebra<R> carrier_;
  std::vector<Vec<R>> coeffs_;
  Matrix<R> matrix_;
};

/// [D1, D2] = D1 D2 - D2 D1 in coefficient form.
template <ScalarRing R>
Derivation<R> bracket(const Derivation<R>& a, const Derivation<R>& b) {
  if (!a.carrier().same_as(b.carrier())) throw algebra_mismatch("bracket: derivations of different carriers");
  return Derivation<R>::from_matrix(a.carrier(), mat::commutator(a.carrier().ring(), a.matrix(), b.matrix()));
}

/// Checks D(uv) = D(u)v + uD(v) on every pair of basis monomials.
template <ScalarRing R>
bool is_leibniz(const MonomialAlgebra<R>& carrier, const Matrix<R>& d) {
  const auto& ring = carrier.ring();
  for (std::size_t i = 0; i < carrier.dim(); ++i) {
    auto bi = carrier.basis(i);
    auto di = mat::column(d, i);
    for (std::size_t j = i; j < carrier.dim(); ++j) {
      auto bj = carrier.basis(j);
      auto lhs = mat::apply(ring, d, carrier.mul(bi, bj));
      auto rhs = carrier.add(carrier.mul(di, bj), carrier.mul(bi, mat::column(d, j)));
      if (!carrier.equal(lhs, rhs)) return false;
    }
  }
  return true;
}

/// D(f^(r)) = f^(r-1) D(f) for f over the basis monomials of the augmentation ideal and
/// their pairwise sums, r ranging over the p-powers. Pairs where f^(r) leaves the
/// truncation bounds are skipped, since there the truncated power is not the divided power.
template <ScalarRing R>
bool is_special_derivation(const DPAlgebra<R>& a, const Matrix<R>& d) {
  const auto& mono = a.monomial_algebra();
  if (!is_leibniz(mono, d)) return false;
  std::uint64_t max_bound = 0;
  for (std::size_t i = 0; i < a.m(); ++i) max_bound = std::max(max_bound, a.bound(i));
  std::vector<Vec<R>> samples;
  for (std::size_t i = 1; i < a.dim(); ++i) samples.push_back(mono.basis(i));
  for (std::size_t i = 1; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) samples.push_back(mono.add(mono.basis(i), mono.basis(j)));
  const auto& ring = a.ring();
  auto fits = [&](const Vec<R>& f, std::uint64_t r) {
    for (std::size_t idx = 1; idx < f.size(); ++idx) {
      if (ring.is_zero(f[idx])) continue;
      for (std::size_t i = 0; i < a.m(); ++i)
        if (a.multi_index(idx)[i] * r >= a.bound(i)) return false;
    }
    return true;
  };
  for (const auto& f : samples) {
    auto df = mat::apply(ring, d, f);
    for (std::uint64_t r = a.p(); r < max_bound; r *= a.p()) {
      if (!fits(f, r)) continue;
      auto lhs = mat::apply(ring, d, a.gamma_dense(f, r));
      auto rhs = mono.mul(a.gamma_dense(f, r - 1), df);
      if (!mono.equal(lhs, rhs)) return false;
    }
  }
  return true;
}

}  // namespace wittalg

#endif  // WITTALG_LIE_DERIVATION_HPP
