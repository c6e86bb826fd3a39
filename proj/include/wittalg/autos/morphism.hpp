#ifndef WITTALG_AUTOS_MORPHISM_HPP
#define WITTALG_AUTOS_MORPHISM_HPP

#include <vector>

#include <nlohmann/json.hpp>

#include "wittalg/dpalg/dp_algebra.hpp"
#include "wittalg/dpalg/truncated_poly.hpp"
#include "wittalg/linalg.hpp"

namespace wittalg {

/// A ring endomorphism of A(m;n) over R, stored as the images of the generators
/// x_i^(p^s) and the matrix on the monomial basis (column a is the image of x^(a)).
template <ScalarRing R>
class AlgebraMorphism {
 public:
  using Images = std::vector<std::vector<Vec<R>>>;  // images[i][s]

  /// Extends generator images multiplicatively through the truncated polynomial
  /// presentation x^(a) = c_a prod (x_i^(p^s))^{e_is}.
  static AlgebraMorphism from_generator_images(const DPAlgebra<R>& a, Images images) {
    const auto& ring = a.ring();
    const auto& mono = a.monomial_algebra();
    if (images.size() != a.m()) throw invalid_argument("morphism: one image list per variable");
    for (std::size_t i = 0; i < a.m(); ++i) {
      if (images[i].size() != static_cast<std::size_t>(a.n()[i]))
        throw invalid_argument("morphism: wrong number of generator images for variable " + std::to_string(i + 1));
      for (std::size_t s = 0; s < images[i].size(); ++s) {
        if (images[i][s].size() != a.dim()) throw invalid_argument("morphism: image has wrong length");
        if (!mono.is_zero(mono.pow(images[i][s], a.p()))) throw relation_violated(i, s);
      }
    }
    TruncatedPolyIso<R> iso(a);
    // power[idx] = image of the y-monomial sharing index idx
    std::vector<Vec<R>> power(a.dim());
    power[0] = mono.one();
    Matrix<R> m(ring, a.dim(), a.dim());
    mat::set_column(m, 0, power[0]);
    for (std::size_t idx = 1; idx < a.dim(); ++idx) {
      auto e = iso.y_exponents(idx);
      // peel one factor y_is off the highest nonzero digit
      std::size_t vi = 0, vs = 0;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t s = 0; s < e[i].size(); ++s)
          if (e[i][s]) vi = i, vs = s;
      std::size_t rest = idx - a.generator_index(vi, vs);
      power[idx] = mono.mul(power[rest], images[vi][vs]);
      mat::set_column(m, idx, mono.scale(iso.presentation_constant(idx), power[idx]));
    }
    AlgebraMorphism phi(a, std::move(images), std::move(m));
    phi.require_invertible();
    return phi;
  }

  /// From a full matrix; multiplicativity is verified on every pair of basis monomials.
  static AlgebraMorphism from_matrix(const DPAlgebra<R>& a, Matrix<R> m) {
    const auto& mono = a.monomial_algebra();
    if (m.rows != a.dim() || m.cols != a.dim()) throw invalid_argument("morphism: matrix has wrong shape");
    if (!mono.equal(mat::column(m, 0), mono.one())) throw invalid_argument("morphism: 1 must map to 1");
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = i; j < a.dim(); ++j) {
        const auto& pr = mono.product(i, j);
        auto lhs = pr.index < 0 ? mono.zero() : mono.scale(pr.coeff, mat::column(m, static_cast<std::size_t>(pr.index)));
        if (!mono.equal(lhs, mono.mul(mat::column(m, i), mat::column(m, j))))
          throw invalid_argument("morphism: matrix is not multiplicative");
      }
    auto images = extract_images(a, m);
    AlgebraMorphism phi(a, std::move(images), std::move(m));
    phi.require_invertible();
    return phi;
  }

  static AlgebraMorphism identity(const DPAlgebra<R>& a) {
    auto m = mat::identity(a.ring(), a.dim());
    auto images = extract_images(a, m);
    return AlgebraMorphism(a, std::move(images), std::move(m));
  }

  const DPAlgebra<R>& algebra() const { return a_; }
  const Matrix<R>& matrix() const { return m_; }
  const Images& images() const { return images_; }
  const Vec<R>& image(std::size_t i, std::size_t s) const { return images_[i][s]; }
  Vec<R> apply(const Vec<R>& f) const { return mat::apply(a_.ring(), m_, f); }
  bool equal(const AlgebraMorphism& o) const { return mat::equal(a_.ring(), m_, o.m_); }

  /// This after other: x -> this(other(x)).
  AlgebraMorphism after(const AlgebraMorphism& other) const {
    if (!(a_ == other.a_)) throw algebra_mismatch("compose: morphisms of different algebras");
    auto m = mat::mul(a_.ring(), m_, other.m_);
    auto images = extract_images(a_, m);
    return AlgebraMorphism(a_, std::move(images), std::move(m));
  }

  AlgebraMorphism inverse() const {
    auto inv = wittalg::inverse(a_.ring(), m_);
    if (!inv) throw not_invertible("morphism is not invertible");
    auto images = extract_images(a_, *inv);
    return AlgebraMorphism(a_, std::move(images), std::move(*inv));
  }

  /// {images: [[element JSON per s] per i]}
  nlohmann::json to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& row : images_) {
      auto r = nlohmann::json::array();
      for (const auto& v : row) r.push_back(a_.to_json(a_.from_dense(v)));
      arr.push_back(r);
    }
    return arr;
  }
  static AlgebraMorphism from_json(const DPAlgebra<R>& a, const nlohmann::json& j) {
    if (!j.is_array() || j.size() != a.m()) throw invalid_argument("morphism JSON: one image list per variable");
    Images images;
    for (const auto& row : j) {
      if (!row.is_array()) throw invalid_argument("morphism JSON: image list must be an array");
      std::vector<Vec<R>> r;
      for (const auto& e : row) r.push_back(a.to_dense(a.from_json(e)));
      images.push_back(std::move(r));
    }
    return from_generator_images(a, std::move(images));
  }

 private:
  AlgebraMorphism(DPAlgebra<R> a, Images images, Matrix<R> m)
      : a_(std::move(a)), images_(std::move(images)), m_(std::move(m)) {}

  static Images extract_images(const DPAlgebra<R>& a, const Matrix<R>& m) {
    Images images(a.m());
    for (std::size_t i = 0; i < a.m(); ++i)
      for (int s = 0; s < a.n()[i]; ++s) images[i].push_back(mat::column(m, a.generator_index(i, static_cast<std::size_t>(s))));
    return images;
  }

  void require_invertible() const {
    if (!wittalg::inverse(a_.ring(), m_)) throw not_invertible("morphism matrix is singular");
  }

  DPAlgebra<R> a_;
  Images images_;
  Matrix<R> m_;
};

template <ScalarRing R>
AlgebraMorphism<R> morphism_from_generator_images(const DPAlgebra<R>& a,
                                                  typename AlgebraMorphism<R>::Images images) {
  return AlgebraMorphism<R>::from_generator_images(a, std::move(images));
}

/// phi after psi.
template <ScalarRing R>
AlgebraMorphism<R> compose(const AlgebraMorphism<R>& phi, const AlgebraMorphism<R>& psi) {
  return phi.after(psi);
}

template <ScalarRing R>
AlgebraMorphism<R> invert(const AlgebraMorphism<R>& phi) {
  return phi.inverse();
}

}  // namespace wittalg

#endif  // WITTALG_AUTOS_MORPHISM_HPP
