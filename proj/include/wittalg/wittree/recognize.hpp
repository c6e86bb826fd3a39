#ifndef WITTALG_WITTREE_RECOGNIZE_HPP
#define WITTALG_WITTREE_RECOGNIZE_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wittalg/field_poly.hpp"
#include "wittalg/lie/witt.hpp"
#include "wittalg/wittree/forms.hpp"

namespace wittalg {

template <ScalarRing F>
struct EigenDecomposition {
  using value_type = typename F::value_type;
  std::size_t n = 0;
  /// lambda_{p^s}, s < n.
  std::vector<value_type> generators;
  /// lambda_i = sum_s i_s lambda_{p^s} over the base-p digits of i.
  std::vector<value_type> eigenvalues;
  /// u_i spanning the lambda_i eigenspace, u_i^p = 1, u_0 = 1.
  std::vector<Vec<F>> units;
};

namespace detail {

template <ScalarRing F>
std::vector<typename F::value_type> root_candidates(const F& field) {
  std::vector<typename F::value_type> out;
  if constexpr (FiniteFieldRing<F>) {
    for (std::uint64_t i = 0; i < field.size(); ++i) out.push_back(field.element(i));
  } else {
    for (std::uint32_t i = 0; i < field.characteristic(); ++i) out.push_back(field.from_int(i));
  }
  return out;
}

template <ScalarRing F>
nlohmann::json poly_json(const F& field, const field_poly::Poly<F>& f) {
  auto out = nlohmann::json::array();
  for (const auto& c : f) out.push_back(field.to_string(c));
  return out;
}

}  // namespace detail

/// Diagonalizes the derivation E of A: distinct eigenvalues forming an F_p-space of
/// dimension n with p^n = dim A, and unit eigenvectors normalized to u^p = 1.
template <ScalarRing F>
EigenDecomposition<F> eigen_decompose(const MonomialAlgebra<F>& A, const Matrix<F>& E) {
  const auto& field = A.ring();
  const std::uint32_t p = field.characteristic();
  const std::size_t d = A.dim();
  auto cp = field_poly::charpoly(field, E);
  if (!field_poly::is_separable(field, cp))
    throw inseparable_char_poly("characteristic polynomial is inseparable: " + detail::poly_json(field, cp).dump());
  std::vector<typename F::value_type> roots;
  for (const auto& x : detail::root_candidates(field))
    if (field.is_zero(field_poly::eval(field, cp, x))) roots.push_back(x);
  if (roots.size() != d) throw invalid_argument("characteristic polynomial does not split over " + field.name());

  EigenDecomposition<F> res;
  std::vector<typename F::value_type> span{field.zero()};
  for (const auto& r : roots) {
    bool inside = false;
    for (const auto& v : span) inside = inside || field.equal(v, r);
    if (inside) continue;
    res.generators.push_back(r);
    std::vector<typename F::value_type> grown;
    for (std::uint32_t k = 0; k < p; ++k)
      for (const auto& v : span) grown.push_back(field.add(v, field.mul(field.from_int(k), r)));
    span = std::move(grown);
  }
  res.n = res.generators.size();
  if (span.size() != d) throw invalid_argument("eigenvalues do not form an F_p-space of dimension log_p dim A");

  const auto& mono = A;
  std::vector<Vec<F>> gen_units;
  for (const auto& lam : res.generators) {
    auto shifted = mat::sub(field, E, mat::scale(field, lam, mat::identity(field, d)));
    auto ker = nullspace(field, shifted);
    if (ker.size() != 1) throw invalid_argument("eigenspace is not one-dimensional");
    auto v = ker[0];
    auto vp = mono.pow(v, p);
    for (std::size_t r = 1; r < d; ++r)
      if (!field.is_zero(vp[r])) throw invalid_argument("p-th power of an eigenvector is not constant");
    if (field.is_zero(vp[0])) throw invalid_argument("eigenvector is not a unit");
    std::optional<typename F::value_type> root;
    if constexpr (detail::HasPthRoot<F>) root = field.pth_root(vp[0]);
    if (!root) throw invalid_argument("no p-th root of " + field.to_string(vp[0]) + " in " + field.name());
    gen_units.push_back(mono.scale(*field.inverse(*root), v));
  }
  for (std::size_t i = 0; i < d; ++i) {
    auto digits = base_p_digits(i, p, res.n);
    auto lam = field.zero();
    auto u = mono.one();
    for (std::size_t s = 0; s < res.n; ++s) {
      lam = field.add(lam, field.mul(field.from_int(static_cast<std::int64_t>(digits[s])), res.generators[s]));
      u = mono.mul(u, mono.pow(gen_units[s], digits[s]));
    }
    if (!mono.equal(mat::apply(field, E, u), mono.scale(lam, u)))
      throw std::logic_error("eigen_decompose: verification failed");
    res.eigenvalues.push_back(lam);
    res.units.push_back(std::move(u));
  }
  return res;
}

template <ScalarRing F>
struct W1nRecognition {
  bool split = false;
  /// Column k holds the W(1;n) coordinates of the image of the k-th basis element of L.
  std::optional<Matrix<F>> iso;
  std::optional<LieData<F>> witt;
  nlohmann::json certificate = nlohmann::json::object();
};

/// With z in A, z^p = 0 and 1, z, .., z^{p-1} a basis, x^(a) -> z^a / a! identifies
/// A(1;1) with A. Conjugating L by it lands in W(1;1); the structure constants are
/// compared exactly.
template <ScalarRing F>
W1nRecognition<F> transport_to_w11(const WittReeCandidate<F>& c, const Vec<F>& z) {
  const auto& A = c.algebra;
  const auto& field = c.field();
  const std::uint32_t p = field.characteristic();
  if (A.dim() != p) throw invalid_argument("transport_to_w11: carrier must have dimension p");
  if (!A.is_zero(A.pow(z, p))) throw invalid_argument("transport_to_w11: z^p != 0");
  DPAlgebra<F> dp(p, {1}, field);
  auto W = witt_algebra(dp);
  Matrix<F> P(field, p, p);
  auto power = A.one();
  auto fact = field.one();
  for (std::uint32_t a = 0; a < p; ++a) {
    if (a > 0) {
      power = A.mul(power, z);
      fact = field.mul(fact, field.from_int(a));
    }
    mat::set_column(P, a, A.scale(*field.inverse(fact), power));
  }
  auto Pinv = wittalg::inverse(field, P);
  if (!Pinv) throw invalid_argument("transport_to_w11: powers of z are not a basis");
  const std::size_t d = c.lie.dim();
  Matrix<F> iso(field, W.dim(), d);
  for (std::size_t k = 0; k < d; ++k) {
    auto T = mat::mul(field, mat::mul(field, *Pinv, c.op(k)), P);
    auto D = Derivation<F>::from_matrix(dp.monomial_algebra(), T);
    for (std::size_t a = 0; a < p; ++a) iso(witt_index(dp, 0, a), k) = D.coefficient(0)[a];
  }
  W1nRecognition<F> res;
  if (d != W.dim() || !wittalg::inverse(field, iso)) {
    res.certificate = {{"reason", "transported span is not all of W(1;1)"}};
    return res;
  }
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = k + 1; l < d; ++l) {
      auto lhs = mat::apply(field, iso, c.lie.bracket_basis(k, l));
      auto rhs = W.bracket(mat::column(iso, k), mat::column(iso, l));
      if (!vec_equal(field, lhs, rhs)) throw std::logic_error("transport_to_w11: brackets differ");
    }
  res.split = true;
  res.iso = std::move(iso);
  res.witt = std::move(W);
  res.certificate = {{"structure_constants_match", true}, {"pairs_checked", d * (d - 1) / 2}};
  return res;
}

/// Looks for a diagonalizable E in L (the generator D first, then (1 + g) D for g in the
/// monomial net) with unit eigenvectors u, u^p = 1; with u_1 found, z = u_1 - 1 carries
/// L onto W(1;1). Failure yields a certificate naming why D itself does not split.
template <ScalarRing F>
W1nRecognition<F> recognize_w1n(const WittReeCandidate<F>& c) {
  if (c.rank() != 1) throw invalid_argument("recognize_w1n: candidate must have D-dimension 1");
  const auto& A = c.algebra;
  const auto& field = c.field();
  const std::uint32_t p = field.characteristic();
  if (A.dim() != p) throw invalid_argument("recognize_w1n: explicit recognition is implemented for n = 1");
  const auto& D = c.generators[0].matrix();
  nlohmann::json attempts = nlohmann::json::array();
  std::string first_kind;
  for (std::size_t g = 0; g < A.dim(); ++g) {
    std::string label = g == 0 ? "D" : "(1+" + A.label(g) + ")*D";
    auto E = g == 0 ? D : mat::mul(field, A.mult_matrix(A.add(A.one(), A.basis(g))), D);
    try {
      auto eig = eigen_decompose(A, E);
      auto z = A.sub(eig.units[1], A.one());
      auto res = transport_to_w11(c, z);
      if (!res.split) {
        attempts.push_back({{"element", label}, {"failure", res.certificate["reason"]}});
        continue;
      }
      res.certificate["element"] = label;
      res.certificate["eigenvalue"] = field.to_string(eig.generators[0]);
      res.certificate["attempts"] = attempts;
      return res;
    } catch (const inseparable_char_poly& e) {
      if (g == 0) first_kind = "inseparable_char_poly";
      attempts.push_back({{"element", label}, {"failure", e.what()}});
    } catch (const error& e) {
      if (g == 0) first_kind = "eigen_decomposition_failed";
      attempts.push_back({{"element", label}, {"failure", e.what()}});
    }
  }
  W1nRecognition<F> res;
  res.certificate = {{"reason", first_kind.empty() ? "no split element found" : first_kind},
                     {"char_poly", detail::poly_json(field, field_poly::charpoly(field, D))},
                     {"attempts", attempts}};
  return res;
}

struct Trivialization {
  WittReeCandidate<RatFuncField> extended;
  RatFuncField::value_type root;
  W1nRecognition<RatFuncField> iso;
};

/// Base change of a one-variable form k(t)[x]/(x^p - a(t)) to k(u), u^p = t, where
/// a = b^p with b(u) = a(u); then z = x - b has z^p = 0 and carries L onto W(1;1).
inline Trivialization trivialize_insep(const WittReeCandidate<RatFuncField>& c) {
  if (c.relations.size() != 1 || c.rank() != 1)
    throw invalid_argument("trivialize_insep: expects a one-variable purely inseparable form");
  const auto& k = c.field();
  const std::uint32_t p = k.characteristic();
  std::string var = k.variable() == "u" ? "v" : "u";
  RatFuncField kk(p, var);
  auto spread = [&](const fp_poly::Poly& f) {
    fp_poly::Poly g(f.empty() ? 0 : (f.size() - 1) * p + 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) g[i * p] = f[i];
    return g;
  };
  auto lift = [&](const RatFuncField::value_type& v) { return kk.from_polys(spread(v.num), spread(v.den)); };
  auto a = c.relations[0];
  auto A = pia_make(kk, {lift(a)});
  MonomialAlgebra<RatFuncField> carrier = A;
  std::vector<Vec<RatFuncField>> coeffs;
  for (const auto& f : c.generators[0].coefficients()) {
    Vec<RatFuncField> g;
    for (const auto& v : f) g.push_back(lift(v));
    coeffs.push_back(std::move(g));
  }
  Derivation<RatFuncField> D(carrier, std::move(coeffs));
  auto ext = make_candidate(carrier, {D}, c.name + "_extended", {lift(a)});
  auto b = kk.from_polys(a.num, a.den);
  auto z = carrier.sub(A.x(0), carrier.scalar(b));
  auto iso = transport_to_w11(ext, z);
  iso.certificate["root"] = kk.to_string(b);
  iso.certificate["field"] = kk.name();
  return {std::move(ext), b, std::move(iso)};
}

}  // namespace wittalg

#endif  // WITTALG_WITTREE_RECOGNIZE_HPP
