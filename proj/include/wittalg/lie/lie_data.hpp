#ifndef WITTALG_LIE_LIE_DATA_HPP
#define WITTALG_LIE_LIE_DATA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "wittalg/errors.hpp"
#include "wittalg/linalg.hpp"

namespace wittalg {

/// A Lie algebra given by structure constants [e_i, e_j] = sum_k c_ij^k e_k over a scalar
/// ring. Brackets are stored sparsely for every ordered pair.
template <ScalarRing R>
class LieData {
 public:
  using value_type = typename R::value_type;
  using Sparse = std::vector<std::pair<std::uint32_t, value_type>>;

  LieData(R ring, std::size_t dim) : ring_(std::move(ring)), dim_(dim), table_(dim * dim) {}

  /// Builds from a bracket oracle on basis pairs i<j; fills antisymmetric partners.
  template <class F>
  static LieData from_brackets(R ring, std::size_t dim, F&& bracket_of) {
    LieData L(std::move(ring), dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j) L.set_bracket(i, j, bracket_of(i, j));
    return L;
  }

  const R& ring() const { return ring_; }
  std::size_t dim() const { return dim_; }

  const Sparse& bracket_sparse(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  Vec<R> bracket_basis(std::size_t i, std::size_t j) const {
    Vec<R> v(dim_, ring_.zero());
    for (auto& [k, c] : bracket_sparse(i, j)) v[k] = c;
    return v;
  }

  /// Sets [e_i, e_j] = v (and [e_j, e_i] = -v).
  void set_bracket(std::size_t i, std::size_t j, const Vec<R>& v) {
    Sparse s, t;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!ring_.is_zero(v[k])) {
        s.emplace_back(static_cast<std::uint32_t>(k), v[k]);
        t.emplace_back(static_cast<std::uint32_t>(k), ring_.neg(v[k]));
      }
    if (i == j && !s.empty()) throw invalid_argument("LieData: [e_i, e_i] must vanish");
    table_[i * dim_ + j] = std::move(s);
    if (i != j) table_[j * dim_ + i] = std::move(t);
  }

  Vec<R> bracket(const Vec<R>& u, const Vec<R>& v) const {
    Vec<R> out(dim_, ring_.zero());
    for (std::size_t i = 0; i < dim_; ++i) {
      if (ring_.is_zero(u[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (ring_.is_zero(v[j])) continue;
        auto uv = ring_.mul(u[i], v[j]);
        for (auto& [k, c] : bracket_sparse(i, j)) out[k] = ring_.add(out[k], ring_.mul(uv, c));
      }
    }
    return out;
  }

  /// ad(e_i): column j holds [e_i, e_j].
  Matrix<R> ad_basis(std::size_t i) const {
    Matrix<R> m(ring_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
      for (auto& [k, c] : bracket_sparse(i, j)) m(k, j) = c;
    return m;
  }
  Matrix<R> ad(const Vec<R>& u) const {
    Matrix<R> m(ring_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (ring_.is_zero(u[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        for (auto& [k, c] : bracket_sparse(i, j)) m(k, j) = ring_.add(m(k, j), ring_.mul(u[i], c));
    }
    return m;
  }
  std::vector<Matrix<R>> ad_all() const {
    std::vector<Matrix<R>> v;
    for (std::size_t i = 0; i < dim_; ++i) v.push_back(ad_basis(i));
    return v;
  }

  bool is_antisymmetric() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!table_[i * dim_ + i].empty()) return false;
      for (std::size_t j = i + 1; j < dim_; ++j) {
        auto a = bracket_basis(i, j), b = bracket_basis(j, i);
        for (std::size_t k = 0; k < dim_; ++k)
          if (!ring_.is_zero(ring_.add(a[k], b[k]))) return false;
      }
    }
    return true;
  }

  /// Jacobi identity on all basis triples i<j<k.
  bool satisfies_jacobi() const {
    auto ads = ad_all();
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j) {
        auto ij = bracket_basis(i, j);
        for (std::size_t k = j + 1; k < dim_; ++k) {
          Vec<R> total(dim_, ring_.zero());
          auto add_into = [&](const Vec<R>& v) {
            for (std::size_t t = 0; t < dim_; ++t) total[t] = ring_.add(total[t], v[t]);
          };
          // equivalently [k,[i,j]] + [i,[j,k]] + [j,[k,i]] = 0
          add_into(mat::apply(ring_, ads[k], ij));
          add_into(mat::apply(ring_, ads[i], bracket_basis(j, k)));
          add_into(mat::apply(ring_, ads[j], bracket_basis(k, i)));
          if (!vec_is_zero(ring_, total)) return false;
        }
      }
    return true;
  }

  // ---- optional metadata ----
  std::vector<std::string> labels;
  /// Z^m degree of each basis element, when the algebra is graded by its basis.
  std::optional<std::vector<std::vector<int>>> grading;
  /// Realization of each basis element as an operator, when embedded in some End(V).
  std::optional<std::vector<Matrix<R>>> embedding;
  nlohmann::json parameters = nlohmann::json::object();

  std::string label(std::size_t i) const { return i < labels.size() ? labels[i] : "e" + std::to_string(i + 1); }

  /// {..parameters, dim, basis, brackets: [[i, j, [[k, c]...]]...]} over i<j with nonzero bracket.
  nlohmann::json to_json() const {
    nlohmann::json j = parameters;
    j["dim"] = dim_;
    auto basis = nlohmann::json::array();
    for (std::size_t i = 0; i < dim_; ++i) basis.push_back(label(i));
    j["basis"] = basis;
    auto br = nlohmann::json::array();
    for (std::size_t a = 0; a < dim_; ++a)
      for (std::size_t b = a + 1; b < dim_; ++b) {
        const auto& s = bracket_sparse(a, b);
        if (s.empty()) continue;
        auto terms = nlohmann::json::array();
        for (auto& [k, c] : s) terms.push_back({k, ring_.to_json(c)});
        br.push_back({a, b, terms});
      }
    j["brackets"] = br;
    return j;
  }

  /// Exact equality of structure constants.
  bool same_constants(const LieData& o) const {
    if (dim_ != o.dim_) return false;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j) {
        const auto& a = bracket_sparse(i, j);
        const auto& b = o.bracket_sparse(i, j);
        if (a.size() != b.size()) return false;
        for (std::size_t t = 0; t < a.size(); ++t)
          if (a[t].first != b[t].first || !ring_.equal(a[t].second, b[t].second)) return false;
      }
    return true;
  }

 private:
  R ring_;
  std::size_t dim_;
  std::vector<Sparse> table_;
};

}  // namespace wittalg

#endif  // WITTALG_LIE_LIE_DATA_HPP
