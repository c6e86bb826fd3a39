#ifndef WITTALG_DPALG_TRUNCATED_POLY_HPP
#define WITTALG_DPALG_TRUNCATED_POLY_HPP

#include <vector>

#include "wittalg/dpalg/dp_algebra.hpp"

namespace wittalg {

/// The isomorphism between the truncated polynomial algebra
/// B(m;n) = R[y_is : s < n_i] / (y_is^p) and A(m;n), y_is -> x_i^(p^s).
///
/// A monomial prod y_is^{e_is} (e_is < p) shares its basis index with x^(a), a_i = sum_s e_is p^s,
/// so both maps are diagonal: y^e -> d_a x^(a) and x^(a) -> c_a y^e with c_a = d_a^{-1}.
template <ScalarRing R>
class TruncatedPolyIso {
 public:
  using value_type = typename R::value_type;

  explicit TruncatedPolyIso(DPAlgebra<R> a) : a_(std::move(a)) {
    const auto& ring = a_.ring();
    const auto& mono = a_.monomial_algebra();
    forward_.resize(a_.dim());
    inverse_.resize(a_.dim());
    for (std::size_t idx = 0; idx < a_.dim(); ++idx) {
      // multiply out prod_{i,s} (x_i^(p^s))^{e_is}
      auto prod = mono.one();
      auto e = y_exponents(idx);
      for (std::size_t i = 0; i < a_.m(); ++i)
        for (std::size_t s = 0; s < e[i].size(); ++s)
          for (std::uint64_t k = 0; k < e[i][s]; ++k) prod = mono.mul(prod, mono.basis(a_.generator_index(i, s)));
      forward_[idx] = prod[idx];
      auto inv = ring.inverse(prod[idx]);
      if (!inv) throw std::logic_error("truncated polynomial presentation: non-unit constant");
      inverse_[idx] = *inv;
    }
  }

  const DPAlgebra<R>& algebra() const { return a_; }

  /// Exponents e[i][s] of the y-monomial sharing index idx.
  std::vector<std::vector<std::uint64_t>> y_exponents(std::size_t idx) const {
    const auto& a = a_.multi_index(idx);
    std::vector<std::vector<std::uint64_t>> e(a_.m());
    for (std::size_t i = 0; i < a_.m(); ++i)
      e[i] = base_p_digits(a[i], a_.p(), static_cast<std::size_t>(a_.n()[i]));
    return e;
  }

  /// x^(a) = c_a prod_{i,s} (x_i^(p^s))^{e_is}.
  const value_type& presentation_constant(std::size_t idx) const { return inverse_[idx]; }

  Vec<R> to_dp(const Vec<R>& b) const { return diag(forward_, b); }
  Vec<R> to_poly(const Vec<R>& f) const { return diag(inverse_, f); }

  /// Multiplication in B(m;n) in the shared index coordinates.
  Vec<R> poly_mul(const Vec<R>& u, const Vec<R>& v) const {
    const auto& ring = a_.ring();
    Vec<R> out(a_.dim(), ring.zero());
    std::uint64_t p = a_.p();
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (ring.is_zero(u[i])) continue;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (ring.is_zero(v[j])) continue;
        auto ei = y_exponents(i), ej = y_exponents(j);
        bool vanish = false;
        for (std::size_t k = 0; k < ei.size() && !vanish; ++k)
          for (std::size_t s = 0; s < ei[k].size(); ++s)
            if (ei[k][s] + ej[k][s] >= p) vanish = true;
        if (vanish) continue;
        // digit-wise sums without carry add the indices
        std::size_t k = i + j;
        out[k] = ring.add(out[k], ring.mul(u[i], v[j]));
      }
    }
    return out;
  }

 private:
  Vec<R> diag(const std::vector<value_type>& d, const Vec<R>& v) const {
    Vec<R> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = a_.ring().mul(d[i], v[i]);
    return out;
  }

  DPAlgebra<R> a_;
  std::vector<value_type> forward_, inverse_;
};

template <ScalarRing R>
TruncatedPolyIso<R> truncated_poly_iso(std::uint32_t p, std::vector<int> n, R ring) {
  return TruncatedPolyIso<R>(DPAlgebra<R>(p, std::move(n), std::move(ring)));
}

}  // namespace wittalg

#endif  // WITTALG_DPALG_TRUNCATED_POLY_HPP
