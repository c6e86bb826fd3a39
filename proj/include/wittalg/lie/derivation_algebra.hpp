#ifndef WITTALG_LIE_DERIVATION_ALGEBRA_HPP
#define WITTALG_LIE_DERIVATION_ALGEBRA_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wittalg/lie/lie_data.hpp"
#include "wittalg/linalg.hpp"

namespace wittalg {

template <ScalarRing F>
struct DerivationAlgebra {
  LieData<F> algebra;
  /// Basis derivations as operators on L (columns are images of basis vectors).
  std::vector<Matrix<F>> operators;
  /// "graded" when solved per grading shift, "direct" otherwise.
  std::string method;
};

namespace detail {

/// Solves D[e_i,e_j] = [De_i,e_j] + [e_i,De_j] (i<j) for D supported on the given
/// entries (target row, source column); returns a basis of solutions as d x d matrices.
template <ScalarRing F>
std::vector<Matrix<F>> solve_derivations(const LieData<F>& L, const std::vector<Vec<F>>& dense_bracket,
                                         const std::vector<std::pair<std::size_t, std::size_t>>& entries,
                                         const std::function<bool(std::size_t, std::size_t, std::size_t)>& target_ok) {
  const auto& field = L.ring();
  std::size_t d = L.dim(), nv = entries.size();
  if (nv == 0) return {};
  // var_of[row * d + col]
  std::vector<long> var_of(d * d, -1);
  for (std::size_t v = 0; v < nv; ++v) var_of[entries[v].first * d + entries[v].second] = static_cast<long>(v);
  // by_col[col] = list of (row, var)
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_col(d);
  for (std::size_t v = 0; v < nv; ++v) by_col[entries[v].second].emplace_back(entries[v].first, v);

  std::vector<Vec<F>> rows;
  Vec<F> row(nv, field.zero());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t t = 0; t < d; ++t) {
        if (!target_ok(i, j, t)) continue;
        bool any = false;
        // D[e_i,e_j]_t = sum_s c_ij^s D_ts
        for (auto& [s, c] : L.bracket_sparse(i, j)) {
          long v = var_of[t * d + s];
          if (v < 0) continue;
          row[v] = field.add(row[v], c);
          any = true;
        }
        // - [De_i, e_j]_t = - sum_s D_si c_sj^t
        for (auto& [s, v] : by_col[i]) {
          const auto& c = dense_bracket[s * d + j][t];
          if (field.is_zero(c)) continue;
          row[v] = field.sub(row[v], c);
          any = true;
        }
        // - [e_i, De_j]_t = - sum_s D_sj c_is^t
        for (auto& [s, v] : by_col[j]) {
          const auto& c = dense_bracket[i * d + s][t];
          if (field.is_zero(c)) continue;
          row[v] = field.sub(row[v], c);
          any = true;
        }
        if (!any) continue;
        if (!vec_is_zero(field, row)) rows.push_back(row);
        std::fill(row.begin(), row.end(), field.zero());
      }
  Matrix<F> sys(field, rows.size(), nv);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t v = 0; v < nv; ++v) sys(r, v) = rows[r][v];
  auto kernel = nullspace(field, std::move(sys));
  std::vector<Matrix<F>> out;
  for (const auto& k : kernel) {
    Matrix<F> m(field, d, d);
    for (std::size_t v = 0; v < nv; ++v) m(entries[v].first, entries[v].second) = k[v];
    out.push_back(std::move(m));
  }
  return out;
}

template <ScalarRing F>
std::vector<Vec<F>> dense_brackets(const LieData<F>& L) {
  std::vector<Vec<F>> db;
  db.reserve(L.dim() * L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j) db.push_back(L.bracket_basis(i, j));
  return db;
}

inline std::vector<int> add_deg(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}
inline std::vector<int> sub_deg(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

}  // namespace detail

/// Lie algebra structure on a family of linearly independent operators closed under commutator.
template <ScalarRing F>
LieData<F> operator_lie_algebra(const F& field, const std::vector<Matrix<F>>& ops) {
  std::vector<Vec<F>> flat;
  for (const auto& m : ops) flat.push_back(m.data);
  SpanCoordinates<F> coords(field, flat);
  LieData<F> out(field, ops.size());
  for (std::size_t a = 0; a < ops.size(); ++a)
    for (std::size_t b = a + 1; b < ops.size(); ++b) {
      auto c = coords.express(mat::commutator(field, ops[a], ops[b]).data);
      if (!c) throw std::logic_error("operator family is not closed under commutator");
      out.set_bracket(a, b, *c);
    }
  out.embedding = ops;
  return out;
}

/// Der(L) as the solution space of the Leibniz system inside End(L). When L carries a
/// basis grading the system splits by degree shift; otherwise it is solved at once.
template <ScalarRing F>
DerivationAlgebra<F> derivation_algebra(const LieData<F>& L, bool use_grading = true) {
  const auto& field = L.ring();
  std::size_t d = L.dim();
  auto db = detail::dense_brackets(L);
  std::vector<Matrix<F>> ops;
  std::string method;
  if (use_grading && L.grading) {
    method = "graded";
    const auto& g = *L.grading;
    std::map<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>> by_shift;
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) by_shift[detail::sub_deg(g[k], g[j])].emplace_back(k, j);
    for (const auto& [shift, entries] : by_shift) {
      auto ok = [&](std::size_t i, std::size_t j, std::size_t t) {
        return g[t] == detail::add_deg(detail::add_deg(g[i], g[j]), shift);
      };
      auto sols = detail::solve_derivations<F>(L, db, entries, ok);
      ops.insert(ops.end(), sols.begin(), sols.end());
    }
  } else {
    method = "direct";
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) entries.emplace_back(k, j);
    ops = detail::solve_derivations<F>(L, db, entries, [](std::size_t, std::size_t, std::size_t) { return true; });
  }
  auto algebra = operator_lie_algebra(field, ops);
  for (std::size_t i = 0; i < ops.size(); ++i) algebra.labels.push_back("D" + std::to_string(i + 1));
  algebra.parameters = L.parameters;
  return {std::move(algebra), std::move(ops), method};
}

/// The p-th power of an operator.
template <ScalarRing R>
Matrix<R> p_power(const R& ring, const Matrix<R>& m) {
  return mat::power(ring, m, ring.characteristic());
}

/// Coordinates of m in the span of the given operators, if it lies there.
template <ScalarRing F>
std::optional<Vec<F>> operator_membership(const F& field, const std::vector<Matrix<F>>& span, const Matrix<F>& m) {
  std::vector<Vec<F>> flat;
  for (const auto& s : span) flat.push_back(s.data);
  // drop dependent members so the coordinates are well defined
  Subspace<F> seen(field, m.data.size());
  std::vector<Vec<F>> indep;
  for (auto& v : flat)
    if (seen.insert(v)) indep.push_back(v);
  if (indep.empty()) return vec_is_zero(field, m.data) ? std::optional<Vec<F>>(Vec<F>{}) : std::nullopt;
  return SpanCoordinates<F>(field, indep).express(m.data);
}

}  // namespace wittalg

#endif  // WITTALG_LIE_DERIVATION_ALGEBRA_HPP
