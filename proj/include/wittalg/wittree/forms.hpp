#ifndef WITTALG_WITTREE_FORMS_HPP
#define WITTALG_WITTREE_FORMS_HPP

#include <vector>

#include "wittalg/dpalg/dp_algebra.hpp"
#include "wittalg/dpalg/pia.hpp"
#include "wittalg/scalars/ratfunc.hpp"
#include "wittalg/wittree/candidate.hpp"

namespace wittalg {

/// W(m;n) as the A(m;n)-span of the partials inside Der(A(m;n)).
template <ScalarRing F>
WittReeCandidate<F> witt_candidate(const DPAlgebra<F>& a) {
  std::vector<Derivation<F>> gens;
  for (std::size_t i = 0; i < a.m(); ++i) gens.push_back(Derivation<F>::partial(a.monomial_algebra(), i));
  return make_candidate(a.monomial_algebra(), std::move(gens), "witt");
}

/// A = k(t)[x]/(x^p - t) with D(x) = 1, the classical nonsplit form of W(1;1).
inline WittReeCandidate<RatFuncField> ree_form(std::uint32_t p, int n = 1) {
  if (n != 1) throw invalid_argument("ree_form: only n = 1 is supported");
  RatFuncField k(p, "t");
  auto t = k.variable_element();
  auto A = pia_make(k, {t});
  MonomialAlgebra<RatFuncField> carrier = A;
  auto D = Derivation<RatFuncField>::partial(carrier, 0);
  return make_candidate(carrier, {D}, "ree", {t});
}

/// B = F_q[y_1..y_s]/(y_j^p - 1) with D(y_j) = lambda_j y_j.
template <FiniteFieldRing F>
WittReeCandidate<F> multiplicative_form(const F& field, const std::vector<typename F::value_type>& lambda) {
  const std::uint32_t p = field.characteristic();
  const std::size_t s = lambda.size();
  if (s == 0) throw invalid_argument("multiplicative_form: need at least one eigenscalar");
  // every nonzero F_p-combination of the lambdas must be nonzero
  std::vector<std::uint32_t> c(s, 0);
  for (std::uint64_t code = 1; code < ipow(p, s); ++code) {
    std::uint64_t v = code;
    auto sum = field.zero();
    for (std::size_t j = 0; j < s; ++j) {
      c[j] = static_cast<std::uint32_t>(v % p);
      v /= p;
      sum = field.add(sum, field.mul(field.from_int(c[j]), lambda[j]));
    }
    if (field.is_zero(sum)) throw dependent_eigenvalues();
  }
  auto A = pia_make(field, std::vector<typename F::value_type>(s, field.one()));
  MonomialAlgebra<F> carrier = A;
  std::vector<Vec<F>> coeffs;
  for (std::size_t j = 0; j < s; ++j) coeffs.push_back(carrier.scale(lambda[j], A.x(j)));
  Derivation<F> D(carrier, std::move(coeffs));
  return make_candidate(carrier, {D}, "multiplicative", std::vector<typename F::value_type>(s, field.one()));
}

}  // namespace wittalg

#endif  // WITTALG_WITTREE_FORMS_HPP
