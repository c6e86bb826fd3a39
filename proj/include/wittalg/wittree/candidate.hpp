#ifndef WITTALG_WITTREE_CANDIDATE_HPP
#define WITTALG_WITTREE_CANDIDATE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "wittalg/dpalg/monomial_algebra.hpp"
#include "wittalg/lie/derivation.hpp"
#include "wittalg/lie/derivation_algebra.hpp"
#include "wittalg/lie/structure.hpp"

namespace wittalg {

/// The A-span of derivations D_1..D_m of a commutative algebra A, as a Lie algebra over
/// the base field on the basis {x^e D_i} (generator-major, monomial-minor) or an
/// independent subset of it when the span is not free.
template <ScalarRing F>
struct WittReeCandidate {
  MonomialAlgebra<F> algebra;
  std::vector<Derivation<F>> generators;
  LieData<F> lie;
  /// (monomial, generator) for each Lie basis element.
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  /// Every x^e D_i is independent.
  bool free = false;
  /// Relations a_j of a purely inseparable carrier x_j^p = a_j, when applicable.
  std::vector<typename F::value_type> relations;
  std::string name;

  const F& field() const { return algebra.ring(); }
  std::size_t rank() const { return generators.size(); }
  Matrix<F> op(std::size_t k) const { return (*lie.embedding)[k]; }
};

template <ScalarRing F>
WittReeCandidate<F> make_candidate(MonomialAlgebra<F> algebra, std::vector<Derivation<F>> generators,
                                   std::string name = "", std::vector<typename F::value_type> relations = {}) {
  const auto& field = algebra.ring();
  const std::size_t n = algebra.dim();
  for (const auto& g : generators)
    if (!g.carrier().same_as(algebra)) throw algebra_mismatch("candidate: derivation of a different algebra");
  Subspace<F> span(field, n * n);
  std::vector<Matrix<F>> ops;
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t e = 0; e < n; ++e) {
      auto m = mat::mul(field, algebra.mult_matrix(algebra.basis(e)), generators[i].matrix());
      if (!span.insert(m.data)) continue;
      ops.push_back(std::move(m));
      basis.emplace_back(e, i);
    }
  LieData<F> lie = [&] {
    try {
      return operator_lie_algebra(field, ops);
    } catch (const std::logic_error&) {
      throw invalid_argument("candidate: the A-span of the derivations is not closed under bracket");
    }
  }();
  for (auto [e, i] : basis) {
    std::string mono = e == 0 ? "" : algebra.label(e) + "*";
    lie.labels.push_back(mono + "D" + std::to_string(i + 1));
  }
  lie.parameters = {{"form", name}};
  WittReeCandidate<F> c{std::move(algebra), std::move(generators), std::move(lie), std::move(basis), false,
                        std::move(relations), std::move(name)};
  c.free = c.lie.dim() == c.rank() * c.algebra.dim();
  return c;
}

template <ScalarRing F>
struct OrthonormalSystem {
  std::vector<Derivation<F>> derivations;
  std::vector<Vec<F>> elements;
};

namespace detail {

template <ScalarRing F>
Vec<F> det_in(const MonomialAlgebra<F>& A, const std::vector<std::vector<Vec<F>>>& m) {
  const std::size_t k = m.size();
  if (k == 0) return A.one();
  if (k == 1) return m[0][0];
  auto total = A.zero();
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<Vec<F>>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Vec<F>> row;
      for (std::size_t cc = 0; cc < k; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    auto term = A.mul(m[0][c], det_in(A, minor));
    total = c % 2 == 0 ? A.add(total, term) : A.sub(total, term);
  }
  return total;
}

/// Calls fn on each k-subset of {0..n-1} in lexicographic order until it returns true.
template <class Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (fn(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

template <class F>
concept HasPthRoot = requires(const F& f, const typename F::value_type& a) {
  { f.pth_root(a) } -> std::same_as<std::optional<typename F::value_type>>;
};

}  // namespace detail

/// Elements g_j from the monomial net with det(D_i(g_j)) a unit, and D'_k = sum_i C_ki D_i
/// with C the inverse of (D_i(g_j)), so that D'_k(g_j) = delta_kj. Each g_j is shifted by
/// a constant to be nilpotent when its p-th power has a root in the field.
template <ScalarRing F>
OrthonormalSystem<F> orthonormal_system(const WittReeCandidate<F>& c) {
  const auto& A = c.algebra;
  const auto& field = c.field();
  const std::size_t m = c.rank();
  const std::size_t net = A.dim() - 1;
  auto value = [&](std::size_t i, std::size_t idx) { return c.generators[i].apply(A.basis(idx)); };
  std::optional<std::vector<std::size_t>> found;
  std::size_t tried = 0;
  detail::for_each_subset(net, m, [&](const std::vector<std::size_t>& s) {
    if (++tried > 500000) throw resource_error("orthonormal_system: monomial net too large");
    std::vector<std::vector<Vec<F>>> M(m, std::vector<Vec<F>>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) M[i][j] = value(i, s[j] + 1);
    if (!A.is_unit(detail::det_in(A, M))) return false;
    found = s;
    return true;
  });
  if (!found) {
    std::size_t best = 0;
    for (std::size_t r = m; r-- > 1 && best == 0;) {
      std::size_t budget = 200000;
      detail::for_each_subset(m, r, [&](const std::vector<std::size_t>& rows) {
        return detail::for_each_subset(net, r, [&](const std::vector<std::size_t>& cols) {
          if (budget-- == 0) return true;
          std::vector<std::vector<Vec<F>>> M(r, std::vector<Vec<F>>(r));
          for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) M[i][j] = value(rows[i], cols[j] + 1);
          if (!A.is_unit(detail::det_in(A, M))) return false;
          best = r;
          return true;
        });
      });
    }
    throw no_orthonormal_system(best);
  }
  std::vector<std::vector<Vec<F>>> M(m, std::vector<Vec<F>>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) M[i][j] = value(i, (*found)[j] + 1);
  auto det_inv = *A.inverse(detail::det_in(A, M));
  // C = adj(M) / det
  std::vector<std::vector<Vec<F>>> C(m, std::vector<Vec<F>>(m));
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<std::vector<Vec<F>>> minor;
      for (std::size_t r = 0; r < m; ++r) {
        if (r == i) continue;
        std::vector<Vec<F>> row;
        for (std::size_t cc = 0; cc < m; ++cc)
          if (cc != k) row.push_back(M[r][cc]);
        minor.push_back(std::move(row));
      }
      auto cof = detail::det_in(A, minor);
      if ((i + k) % 2) cof = A.scale(field.from_int(-1), cof);
      C[k][i] = A.mul(cof, det_inv);
    }
  OrthonormalSystem<F> out;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<Vec<F>> coeffs(A.variables(), A.zero());
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t l = 0; l < A.variables(); ++l)
        coeffs[l] = A.add(coeffs[l], A.mul(C[k][i], c.generators[i].coefficient(l)));
    out.derivations.emplace_back(A, std::move(coeffs));
  }
  for (auto idx : *found) {
    auto g = A.basis(idx + 1);
    if constexpr (detail::HasPthRoot<F>) {
      auto gp = A.pow(g, field.characteristic());
      bool constant = true;
      for (std::size_t r = 1; r < gp.size(); ++r) constant = constant && field.is_zero(gp[r]);
      if (constant)
        if (auto root = field.pth_root(gp[0]); root && !field.is_zero(*root)) g = A.sub(g, A.scalar(*root));
    }
    out.elements.push_back(std::move(g));
  }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = 0; j < m; ++j) {
      auto v = out.derivations[k].apply(out.elements[j]);
      if (!A.equal(v, k == j ? A.one() : A.zero())) throw std::logic_error("orthonormal_system: verification failed");
    }
  return out;
}

/// Elements of A annihilated by every generator.
template <ScalarRing F>
std::vector<Vec<F>> wr2_constants(const WittReeCandidate<F>& c) {
  const auto& field = c.field();
  const std::size_t n = c.algebra.dim();
  Matrix<F> sys(field, n * c.rank(), n);
  for (std::size_t i = 0; i < c.rank(); ++i)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t col = 0; col < n; ++col) sys(i * n + r, col) = c.generators[i].matrix()(r, col);
  if (c.rank() == 0) {
    std::vector<Vec<F>> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(c.algebra.basis(i));
    return all;
  }
  return nullspace(field, std::move(sys));
}

template <ScalarRing F>
bool wr2_pass(const WittReeCandidate<F>& c, const std::vector<Vec<F>>& constants) {
  if (constants.size() != 1) return false;
  Subspace<F> s(c.field(), c.algebra.dim());
  s.insert(constants[0]);
  return s.contains(c.algebra.one());
}

struct WR3Result {
  std::size_t center_dim = 0;
  std::size_t enveloping_dim = 0;
  std::size_t lie_dim = 0;
  std::string method;
  bool pass = false;
};

template <ScalarRing F>
WR3Result wr3_central_simple(const WittReeCandidate<F>& c, std::uint64_t seed = 1) {
  WR3Result r;
  r.lie_dim = c.lie.dim();
  r.center_dim = center(c.lie).size();
  if (r.lie_dim == 0) return r;
  auto env = enveloping_closure_dim(c.lie, seed);
  r.enveloping_dim = env.dim;
  r.method = env.method;
  r.pass = r.center_dim == 0 && r.enveloping_dim == r.lie_dim * r.lie_dim;
  return r;
}

struct WittReeReport {
  bool wr1 = false, wr2 = false, wr3 = false;
  bool free = false;
  std::size_t rank = 0;
  std::size_t orthonormal_rank = 0;
  std::string wr1_reason;
  nlohmann::json orthonormal = nullptr;
  std::size_t constants_dim = 0;
  WR3Result central;
  bool verdict() const { return wr1 && wr2 && wr3; }

  nlohmann::json to_json() const {
    nlohmann::json w1 = {{"pass", wr1}, {"free", free}, {"rank", rank}, {"orthonormal_system", orthonormal}};
    if (!wr1) w1["reason"] = wr1_reason;
    if (!wr1) w1["max_rank"] = orthonormal_rank;
    return {{"wr1", w1},
            {"wr2", {{"pass", wr2}, {"constants_dim", constants_dim}}},
            {"wr3",
             {{"pass", wr3},
              {"center_dim", central.center_dim},
              {"enveloping_dim", central.enveloping_dim},
              {"lie_dim", central.lie_dim},
              {"method", central.method}}},
            {"verdict", verdict()}};
  }
};

template <ScalarRing F>
WittReeReport verify_witt_ree(const WittReeCandidate<F>& c, std::uint64_t seed = 1) {
  WittReeReport r;
  r.free = c.free;
  r.rank = c.rank();
  if (!c.free) {
    r.wr1_reason = "A-span of the generators is not free";
  } else if (c.rank() == 0) {
    r.wr1_reason = "no generators";
  } else {
    try {
      auto sys = orthonormal_system(c);
      r.wr1 = true;
      r.orthonormal_rank = c.rank();
      nlohmann::json elems = nlohmann::json::array();
      for (const auto& g : sys.elements) elems.push_back(c.algebra.to_string(g));
      r.orthonormal = {{"elements", elems}};
    } catch (const no_orthonormal_system& e) {
      r.wr1_reason = e.what();
      r.orthonormal_rank = e.achieved_rank;
    }
  }
  auto consts = wr2_constants(c);
  r.constants_dim = consts.size();
  r.wr2 = wr2_pass(c, consts);
  r.central = wr3_central_simple(c, seed);
  r.wr3 = r.central.pass;
  return r;
}

}  // namespace wittalg

#endif  // WITTALG_WITTREE_CANDIDATE_HPP
