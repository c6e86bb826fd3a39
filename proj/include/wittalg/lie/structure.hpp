#ifndef WITTALG_LIE_STRUCTURE_HPP
#define WITTALG_LIE_STRUCTURE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wittalg/lie/lie_data.hpp"
#include "wittalg/linalg.hpp"

namespace wittalg {

/// Z(L) = common kernel of ad(e_i).
template <ScalarRing F>
std::vector<Vec<F>> center(const LieData<F>& L) {
  std::size_t d = L.dim();
  Matrix<F> sys(L.ring(), d * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    auto ad = L.ad_basis(i);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) sys(i * d + r, c) = ad(r, c);
  }
  return nullspace(L.ring(), std::move(sys));
}

/// dim [L, L].
template <ScalarRing F>
std::size_t derived_dim(const LieData<F>& L) {
  Subspace<F> s(L.ring(), L.dim());
  for (std::size_t i = 0; i < L.dim() && s.dim() < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) s.insert(L.bracket_basis(i, j));
  return s.dim();
}

/// Smallest subspace containing the seeds and stable under the operators.
template <ScalarRing F>
Subspace<F> spin(const F& field, const std::vector<Matrix<F>>& ops, const std::vector<Vec<F>>& seeds,
                 std::size_t n) {
  Subspace<F> s(field, n);
  std::vector<Vec<F>> queue;
  for (const auto& v : seeds)
    if (s.insert(v)) queue.push_back(v);
  for (std::size_t q = 0; q < queue.size() && s.dim() < n; ++q)
    for (const auto& op : ops) {
      auto w = mat::apply(field, op, queue[q]);
      if (s.insert(w)) queue.push_back(std::move(w));
      if (s.dim() == n) break;
    }
  return s;
}

enum class ModuleVerdict { irreducible, reducible, inconclusive };

template <ScalarRing F>
struct IrreducibilityResult {
  ModuleVerdict verdict = ModuleVerdict::inconclusive;
  /// Irreducible and End_A(V) = scalars (certified by a nullity-one witness).
  bool absolutely = false;
  /// Basis of a proper nonzero invariant subspace when reducible.
  std::vector<Vec<F>> submodule;
  std::size_t attempts = 0;
  nlohmann::json certificate = nlohmann::json::object();
};

/// Norton-style irreducibility test for the module V = F^n under the given operators.
/// Candidate elements theta are random combinations of generators and products of two
/// generators; for theta - c singular (c in the prime field) every kernel vector must
/// spin up to V and a kernel vector of the transpose must spin up to the dual. Attempts
/// continue until a nullity-one witness also certifies absolute irreducibility.
template <ScalarRing F>
IrreducibilityResult<F> irreducibility_test(const F& field, const std::vector<Matrix<F>>& ops, std::size_t n,
                                            std::uint64_t seed = 1, std::size_t max_attempts = 64) {
  IrreducibilityResult<F> res;
  if (n <= 1) {
    res.verdict = ModuleVerdict::irreducible;
    res.absolutely = true;
    res.certificate = {{"reason", "dimension at most one"}};
    return res;
  }
  std::mt19937_64 rng(seed);
  std::uint32_t p = field.characteristic();
  auto rand_scalar = [&] { return field.from_int(static_cast<std::int64_t>(rng() % p)); };
  std::vector<Matrix<F>> transposed;
  for (const auto& op : ops) transposed.push_back(mat::transpose(field, op));
  std::uint64_t enum_limit = 4096;

  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    res.attempts = attempt;
    Matrix<F> theta(field, n, n);
    std::vector<std::pair<std::size_t, std::size_t>> products;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      auto c = rand_scalar();
      if (field.is_zero(c)) continue;
      theta = mat::add(field, theta, mat::scale(field, c, ops[i]));
    }
    std::size_t nprod = attempt == 1 ? 0 : 1 + attempt % 3;
    for (std::size_t t = 0; t < nprod && !ops.empty(); ++t) {
      std::size_t a = rng() % ops.size(), b = rng() % ops.size();
      products.emplace_back(a, b);
      theta = mat::add(field, theta, mat::mul(field, ops[a], ops[b]));
    }
    for (std::uint32_t ci = 0; ci < p; ++ci) {
      auto c = field.from_int(ci);
      auto shifted = theta;
      for (std::size_t k = 0; k < n; ++k) shifted(k, k) = field.sub(shifted(k, k), c);
      auto kernel = nullspace(field, shifted);
      if (kernel.empty()) continue;
      // every kernel vector must generate V
      std::vector<Vec<F>> to_check;
      bool enumerated = false;
      if (kernel.size() == 1) {
        to_check.push_back(kernel[0]);
      } else {
        std::uint64_t count = 1;
        for (std::size_t k = 0; k < kernel.size() && count <= enum_limit; ++k) count *= p;
        bool prime_field = false;
        if constexpr (FiniteFieldRing<F>) prime_field = field.size() == p;
        if (count > enum_limit || !prime_field) {
          to_check.push_back(kernel[0]);
        } else {
          // projective points of the kernel with prime-field coordinates
          enumerated = true;
          std::vector<std::uint32_t> digits(kernel.size(), 0);
          for (std::uint64_t idx = 1; idx < count; ++idx) {
            std::uint64_t rest = idx;
            for (auto& dg : digits) {
              dg = static_cast<std::uint32_t>(rest % p);
              rest /= p;
            }
            // leading nonzero digit equal to one
            std::size_t lead = kernel.size();
            while (lead-- > 0 && digits[lead] == 0) {}
            if (digits[lead] != 1) continue;
            Vec<F> v(n, field.zero());
            for (std::size_t k = 0; k < kernel.size(); ++k) {
              if (!digits[k]) continue;
              auto s = field.from_int(digits[k]);
              for (std::size_t r = 0; r < n; ++r) v[r] = field.add(v[r], field.mul(s, kernel[k][r]));
            }
            to_check.push_back(std::move(v));
          }
        }
      }
      for (const auto& v : to_check) {
        auto s = spin(field, ops, {v}, n);
        if (s.dim() < n) {
          res.verdict = ModuleVerdict::reducible;
          res.submodule = s.basis();
          res.certificate = {{"attempt", attempt}, {"eigenvalue", ci}, {"submodule_dim", s.dim()}};
          return res;
        }
      }
      if (kernel.size() > 1 && !enumerated) continue;
      auto tshift = mat::transpose(field, shifted);
      auto tkernel = nullspace(field, tshift);
      auto ts = spin(field, transposed, {tkernel.at(0)}, n);
      if (ts.dim() < n) {
        // annihilator of an invariant subspace of the dual is invariant
        Matrix<F> ann(field, ts.dim(), n);
        for (std::size_t r = 0; r < ts.dim(); ++r)
          for (std::size_t k = 0; k < n; ++k) ann(r, k) = ts.basis()[r][k];
        res.verdict = ModuleVerdict::reducible;
        res.submodule = nullspace(field, ann);
        res.certificate = {{"attempt", attempt}, {"eigenvalue", ci}, {"dual_submodule_dim", ts.dim()}};
        return res;
      }
      if (res.verdict == ModuleVerdict::irreducible && kernel.size() > 1) continue;
      res.verdict = ModuleVerdict::irreducible;
      res.absolutely = kernel.size() == 1;
      nlohmann::json prods = nlohmann::json::array();
      for (auto& [a, b] : products) prods.push_back({a, b});
      res.certificate = {{"attempt", attempt},
                         {"eigenvalue", ci},
                         {"kernel_dim", kernel.size()},
                         {"product_terms", prods},
                         {"seed", seed}};
      if (res.absolutely) return res;
    }
  }
  return res;
}

template <ScalarRing F>
struct EnvelopingResult {
  std::size_t dim = 0;
  /// "spin-up" or "absolutely-irreducible".
  std::string method;
  nlohmann::json certificate = nlohmann::json::object();
};

/// Dimension of the associative algebra generated by id and the adjoint operators
/// (left and right multiplications span the same space).
///
/// An explicit spin-up in End(L) for small L; for larger L an absolutely irreducible
/// adjoint module is certified first, in which case the algebra is all of End(L).
template <ScalarRing F>
EnvelopingResult<F> enveloping_closure_dim(const LieData<F>& L, std::uint64_t seed = 1,
                                           std::size_t explicit_limit = 12) {
  const auto& field = L.ring();
  std::size_t d = L.dim();
  auto ads = L.ad_all();
  EnvelopingResult<F> res;
  if (d > explicit_limit) {
    auto irr = irreducibility_test(field, ads, d, seed);
    if (irr.verdict == ModuleVerdict::irreducible && irr.absolutely) {
      res.dim = d * d;
      res.method = "absolutely-irreducible";
      res.certificate = irr.certificate;
      return res;
    }
  }
  res.method = "spin-up";
  Subspace<F> span(field, d * d);
  std::vector<Matrix<F>> queue;
  auto push = [&](Matrix<F> m) {
    if (span.insert(m.data)) queue.push_back(std::move(m));
  };
  push(mat::identity(field, d));
  for (const auto& a : ads) push(a);
  std::size_t cap = d * d + 1, steps = 0;
  for (std::size_t q = 0; q < queue.size() && span.dim() < d * d; ++q) {
    if (++steps > cap) throw iteration_cap_exceeded("enveloping algebra spin-up did not stabilize");
    for (const auto& a : ads) {
      push(mat::mul(field, a, queue[q]));
      if (span.dim() == d * d) break;
    }
  }
  res.dim = span.dim();
  return res;
}

enum class SimplicityVerdict { simple, not_simple, inconclusive };

inline std::string to_string(SimplicityVerdict v) {
  switch (v) {
    case SimplicityVerdict::simple: return "simple";
    case SimplicityVerdict::not_simple: return "not_simple";
    default: return "inconclusive";
  }
}

template <ScalarRing F>
struct SimplicityResult {
  SimplicityVerdict verdict = SimplicityVerdict::inconclusive;
  std::size_t derived_dim = 0;
  /// Basis of a proper nonzero ideal when one was found.
  std::vector<Vec<F>> ideal;
  nlohmann::json certificate = nlohmann::json::object();
  bool simple() const { return verdict == SimplicityVerdict::simple; }
};

/// L is simple iff [L,L] = L and the adjoint module is irreducible.
template <ScalarRing F>
SimplicityResult<F> is_simple(const LieData<F>& L, std::uint64_t seed = 1, std::size_t max_attempts = 64) {
  SimplicityResult<F> res;
  std::size_t d = L.dim();
  res.derived_dim = derived_dim(L);
  if (d < 2) {
    res.verdict = SimplicityVerdict::not_simple;
    res.certificate = {{"reason", "dimension below 2"}};
    return res;
  }
  if (res.derived_dim < d) {
    res.verdict = SimplicityVerdict::not_simple;
    res.certificate = {{"reason", "derived algebra is proper"}, {"derived_dim", res.derived_dim}};
    Subspace<F> s(L.ring(), d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) s.insert(L.bracket_basis(i, j));
    res.ideal = s.basis();
    return res;
  }
  auto irr = irreducibility_test(L.ring(), L.ad_all(), d, seed, max_attempts);
  res.certificate = irr.certificate;
  res.certificate["derived_dim"] = res.derived_dim;
  res.certificate["attempts"] = irr.attempts;
  switch (irr.verdict) {
    case ModuleVerdict::irreducible:
      res.verdict = SimplicityVerdict::simple;
      res.certificate["absolutely_irreducible"] = irr.absolutely;
      break;
    case ModuleVerdict::reducible:
      res.verdict = SimplicityVerdict::not_simple;
      res.ideal = irr.submodule;
      res.certificate["ideal_dim"] = irr.submodule.size();
      break;
    default:
      res.verdict = SimplicityVerdict::inconclusive;
  }
  return res;
}

}  // namespace wittalg

#endif  // WITTALG_LIE_STRUCTURE_HPP
