#ifndef WITTALG_DPALG_PIA_HPP
#define WITTALG_DPALG_PIA_HPP

#include <string>
#include <vector>

#include "wittalg/dpalg/monomial_algebra.hpp"
#include "wittalg/scalars/combinatorics.hpp"

namespace wittalg {

/// Purely inseparable algebra of height one, k[x_1..x_r]/(x_j^p - a_j), on the monomials
/// x^e with e_j < p (first exponent most significant). Its partials are d/dx_j.
template <ScalarRing F>
class PIAAlgebra : public MonomialAlgebra<F> {
 public:
  using value_type = typename F::value_type;

  PIAAlgebra(F field, std::vector<value_type> a)
      : MonomialAlgebra<F>(build(field, a)), relations_(std::move(a)) {}

  std::size_t generators() const { return relations_.size(); }
  const std::vector<value_type>& relations() const { return relations_; }
  std::uint32_t p() const { return this->ring().characteristic(); }

  std::vector<std::uint64_t> exponents(std::size_t idx) const {
    auto d = base_p_digits(idx, p(), generators());
    return {d.rbegin(), d.rend()};
  }
  std::size_t index_of(const std::vector<std::uint64_t>& e) const {
    std::size_t idx = 0;
    for (auto v : e) idx = idx * p() + v;
    return idx;
  }
  /// The generator x_j as a dense vector.
  Vec<F> x(std::size_t j) const {
    std::vector<std::uint64_t> e(generators(), 0);
    e[j] = 1;
    return this->basis(index_of(e));
  }

 private:
  static MonomialAlgebra<F> build(const F& field, const std::vector<value_type>& a) {
    if (!field.is_field()) throw invalid_argument("PIAAlgebra: base ring must be a field");
    std::uint64_t p = field.characteristic();
    std::size_t r = a.size();
    std::size_t dim = ipow(p, r);
    auto exps = [&](std::size_t idx) {
      auto d = base_p_digits(idx, p, r);
      return std::vector<std::uint64_t>(d.rbegin(), d.rend());
    };
    auto index = [&](const std::vector<std::uint64_t>& e) {
      std::size_t idx = 0;
      for (auto v : e) idx = idx * p + v;
      return idx;
    };
    using Product = typename MonomialAlgebra<F>::Product;
    std::vector<Product> table(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        auto ei = exps(i), ej = exps(j);
        auto c = field.one();
        std::vector<std::uint64_t> e(r);
        for (std::size_t k = 0; k < r; ++k) {
          e[k] = ei[k] + ej[k];
          if (e[k] >= p) {
            e[k] -= p;
            c = field.mul(c, a[k]);
          }
        }
        Product pr;
        pr.coeff = c;
        pr.index = field.is_zero(c) ? -1 : static_cast<std::int32_t>(index(e));
        table[i * dim + j] = std::move(pr);
      }
    std::vector<Matrix<F>> partials;
    for (std::size_t k = 0; k < r; ++k) {
      Matrix<F> d(field, dim, dim);
      for (std::size_t idx = 0; idx < dim; ++idx) {
        auto e = exps(idx);
        if (e[k] == 0) continue;
        auto c = field.from_int(static_cast<std::int64_t>(e[k]));
        --e[k];
        d(index(e), idx) = c;
      }
      partials.push_back(std::move(d));
    }
    std::vector<std::string> labels;
    for (std::size_t idx = 0; idx < dim; ++idx) {
      auto e = exps(idx);
      std::string l;
      for (std::size_t k = 0; k < r; ++k) {
        if (!e[k]) continue;
        if (!l.empty()) l += "*";
        l += "x" + std::to_string(k + 1);
        if (e[k] > 1) l += "^" + std::to_string(e[k]);
      }
      labels.push_back(l.empty() ? "1" : l);
    }
    return MonomialAlgebra<F>(field, std::move(labels), std::move(table), std::move(partials));
  }

  std::vector<value_type> relations_;
};

template <ScalarRing F>
PIAAlgebra<F> pia_make(F field, std::vector<typename F::value_type> a) {
  return PIAAlgebra<F>(std::move(field), std::move(a));
}

}  // namespace wittalg

#endif  // WITTALG_DPALG_PIA_HPP
