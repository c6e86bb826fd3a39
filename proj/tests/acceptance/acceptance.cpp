// Acceptance suite: one line per criterion, exit status 0 only when all pass.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wittalg/autos.hpp"
#include "wittalg/dpalg.hpp"
#include "wittalg/lie.hpp"
#include "wittalg/scalars.hpp"
#include "wittalg/wittree.hpp"

using namespace wittalg;

namespace {

// Wall-clock budgets in seconds.
constexpr double kDimensionBudget = 60.0;
constexpr double kSimplicityBudget = 10.0;
constexpr double kTriangulationBudget = 300.0;
constexpr double kTwistedBudget = 120.0;

// Sample counts.
constexpr int kArtinHassePoints = 100;
constexpr int kArtinHasseScalars = 10;
constexpr int kTriangulationSeeds = 200;
constexpr int kEquivalenceSamples = 100;
constexpr int kUnipotentSamples = 50;

using TR = TestRing<PrimeField>;

struct Config {
  std::uint32_t p;
  std::vector<int> n;
};

const std::vector<Config> kShipped = {{5, {1}}, {5, {2}}, {7, {1}}, {5, {1, 1}}};
const std::vector<std::vector<int>> kTriangulationShapes = {{1}, {2}, {1, 1}};

std::string config_name(const Config& c) {
  std::string s = "p=" + std::to_string(c.p) + " n=(";
  for (std::size_t i = 0; i < c.n.size(); ++i) s += (i ? "," : "") + std::to_string(c.n[i]);
  return s + ")";
}

struct Verdict {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

std::uint64_t power(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Binomial coefficient mod p through base-p digits.
std::uint64_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  std::uint64_t out = 1;
  while (n || k) {
    std::uint64_t a = n % p, b = k % p;
    if (b > a) return 0;
    std::uint64_t c = 1;
    for (std::uint64_t i = 0; i < b; ++i) c = c * (a - i) % p * power(i + 1, p - 2) % p;
    out = out * c % p;
    n /= p;
    k /= p;
  }
  return out;
}

std::uint64_t factorial_mod(std::uint64_t k, std::uint64_t p) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= k; ++i) f = f * (i % p) % p;
  return f;
}

// 1. dim W(m;n) = m p^|n| and dim Der W = m p^|n| + sum (n_i - 1).
Verdict criterion_dimensions() {
  Verdict v;
  std::ostringstream d;
  for (const auto& c : kShipped) {
    Stopwatch sw;
    std::uint64_t total = 0, extra = 0;
    for (int ni : c.n) {
      total += static_cast<std::uint64_t>(ni);
      extra += static_cast<std::uint64_t>(ni - 1);
    }
    std::uint64_t want_w = c.n.size() * power(c.p, total);
    auto L = witt_algebra(c.p, c.n, PrimeField(c.p));
    auto der = derivation_algebra(L);
    double t = sw.seconds();
    d << config_name(c) << " " << L.dim() << "/" << der.algebra.dim() << " ";
    if (L.dim() != want_w || der.algebra.dim() != want_w + extra) v.fail(config_name(c) + " dimension mismatch");
    if (t >= kDimensionBudget) v.fail(config_name(c) + " exceeded time budget");
  }
  if (v.pass) v.detail = d.str();
  return v;
}

// 2. Simplicity with certificates.
Verdict criterion_simplicity() {
  Verdict v;
  std::ostringstream d;
  for (const auto& c : std::vector<Config>{{5, {1}}, {5, {1, 1}}, {7, {1}}}) {
    Stopwatch sw;
    auto L = witt_algebra(c.p, c.n, PrimeField(c.p));
    auto res = is_simple(L);
    double t = sw.seconds();
    d << config_name(c) << " " << to_string(res.verdict) << " ";
    if (!res.simple()) v.fail(config_name(c) + " not certified simple");
    if (res.certificate.empty()) v.fail(config_name(c) + " missing certificate");
    if (t >= kSimplicityBudget) v.fail(config_name(c) + " exceeded time budget");
  }
  if (v.pass) v.detail = d.str();
  return v;
}

// Closed form of the generator images under the Artin-Hasse exponential of c d_i^{p^s}:
// x_j^(p^u) is fixed when j != i or u < s; otherwise it maps to
// sum_{l < p} c^l / l! x_i^(p^u - l p^s).
Vec<TR> artin_hasse_closed_form(const DPAlgebra<TR>& a, std::size_t i, std::size_t s, const TR::value_type& c,
                                std::size_t j, std::size_t u) {
  const auto& R = a.ring();
  if (j != i || u < s) return a.to_dense(a.generator(j, u));
  auto out = a.monomial_algebra().zero();
  std::uint64_t top = power(a.p(), u), step = power(a.p(), s);
  for (std::uint64_t l = 0; l < a.p() && l * step <= top; ++l) {
    MultiIndex e(a.m(), 0);
    e[i] = top - l * step;
    auto coeff = R.mul(ring_pow(R, c, l), *R.inverse(R.from_int(static_cast<std::int64_t>(factorial_mod(l, a.p())))));
    auto idx = a.index_of(e);
    out[idx] = R.add(out[idx], coeff);
  }
  return out;
}

// 3. g_minus(a) o g_minus(-a) = id and the closed form on generators, over F_5[e1,e2].
Verdict criterion_artin_hasse() {
  Verdict v;
  TR R(PrimeField(5), 2);
  std::mt19937_64 rng(3);
  int points = 0, generators = 0;
  for (const auto& n : kTriangulationShapes) {
    DPAlgebra<TR> a(5, n, R);
    auto id = AlgebraMorphism<TR>::identity(a);
    for (int k = 0; k < kArtinHassePoints; ++k) {
      auto pt = random_kernel_point(a, rng);
      if (!compose(g_minus_point(a, pt), g_minus_point(a, negate(R, pt))).equal(id))
        v.fail("inverse identity failed");
      ++points;
    }
    for (std::size_t i = 0; i < a.m(); ++i)
      for (std::size_t s = 0; s < static_cast<std::size_t>(n[i]); ++s)
        for (int trial = 0; trial < kArtinHasseScalars; ++trial) {
          auto c = R.random_nilpotent(rng);
          auto phi = artin_hasse_auto(a, i, s, c);
          for (std::size_t j = 0; j < a.m(); ++j)
            for (std::size_t u = 0; u < static_cast<std::size_t>(n[j]); ++u) {
              if (!a.monomial_algebra().equal(phi.image(j, u), artin_hasse_closed_form(a, i, s, c, j, u)))
                v.fail("closed form mismatch");
              ++generators;
            }
        }
  }
  if (v.pass) v.detail = std::to_string(points) + " points, " + std::to_string(generators) + " generator images";
  return v;
}

// 4. dp_power_coefficient(j, p^i, p) = 1.
Verdict criterion_congruences() {
  Verdict v;
  int checked = 0;
  for (std::uint64_t p : {5u, 7u})
    for (std::uint64_t i = 0; i <= 2; ++i)
      for (std::uint64_t j = 0; j <= 4; ++j) {
        if (dp_power_coefficient(j, power(p, i), p) != 1)
          v.fail("p=" + std::to_string(p) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
        ++checked;
      }
  if (v.pass) v.detail = std::to_string(checked) + " coefficients";
  return v;
}

template <ScalarRing R>
void triangulation_round(const R& ring, const std::vector<int>& n, Verdict& v, int& count) {
  DPAlgebra<R> a(5, n, ring);
  for (int seed = 1; seed <= kTriangulationSeeds; ++seed) {
    auto built = random_decomposition(a, static_cast<std::uint64_t>(seed));
    auto phi = built.reassemble();
    auto dec = triangulate(phi);
    if (!dec.reassemble().equal(phi)) v.fail("reassembly failed at seed " + std::to_string(seed));
    if (!dec.same_as(built)) v.fail("components not unique at seed " + std::to_string(seed));
    if (!triangulate(dec.reassemble()).same_as(dec)) v.fail("re-decomposition differs at seed " + std::to_string(seed));
    ++count;
  }
}

// 5. Existence and uniqueness of the triangular decomposition.
Verdict criterion_triangulation() {
  Verdict v;
  Stopwatch sw;
  int count = 0;
  for (const auto& n : kTriangulationShapes) {
    triangulation_round(PrimeField(5), n, v, count);
    triangulation_round(TR(PrimeField(5), 1), n, v, count);
  }
  double t = sw.seconds();
  if (t >= kTriangulationBudget) v.fail("exceeded time budget");
  if (v.pass) v.detail = std::to_string(count) + " decompositions in " + std::to_string(static_cast<int>(t)) + " s";
  return v;
}

// 6. is_derivation_automorphism <=> is_dp_automorphism on augmentation-preserving automorphisms.
Verdict criterion_check_equivalence() {
  Verdict v;
  int agree = 0, dp = 0;
  for (const auto& c : kShipped) {
    PrimeField F(c.p);
    DPAlgebra<PrimeField> a(c.p, c.n, F);
    std::mt19937_64 rng(6);
    int sampled = 0;
    for (int trial = 0; sampled < kEquivalenceSamples; ++trial) {
      std::optional<AlgebraMorphism<PrimeField>> phi;
      if (trial % 2 == 0) {
        phi = compose(random_g_plus(a, rng), g_zero_point(a, random_invertible_matrix(F, a.m(), rng, a.n())));
      } else {
        typename AlgebraMorphism<PrimeField>::Images im(a.m());
        for (std::size_t i = 0; i < a.m(); ++i)
          for (int s = 0; s < a.n()[i]; ++s) {
            auto img = a.to_dense(a.generator(i, static_cast<std::size_t>(s)));
            for (std::size_t idx = 1; idx < a.dim(); ++idx)
              if (rng() % 3 == 0) img[idx] = F.add(img[idx], F.random(rng));
            im[i].push_back(img);
          }
        try {
          phi = morphism_from_generator_images(a, im);
        } catch (const not_invertible&) {
          continue;
        } catch (const relation_violated&) {
          continue;
        }
      }
      ++sampled;
      try {
        bool der = is_derivation_automorphism(*phi, true);
        bool dpa = is_dp_automorphism(*phi);
        if (der != dpa) v.fail(config_name(c) + " disagreement at sample " + std::to_string(sampled));
        if (dpa) ++dp;
        ++agree;
      } catch (const std::exception& e) {
        v.fail(config_name(c) + " exception: " + e.what());
      }
    }
  }
  if (v.pass) v.detail = std::to_string(agree) + " samples agree (" + std::to_string(dp) + " derivation-automorphisms)";
  return v;
}

// 7. W(m;n) inside Der A(m;n) satisfies the Witt-Ree axioms with full enveloping algebra.
Verdict criterion_witt_ree() {
  Verdict v;
  std::ostringstream d;
  for (const auto& c : kShipped) {
    auto cand = witt_candidate(DPAlgebra<PrimeField>(c.p, c.n, PrimeField(c.p)));
    auto rep = verify_witt_ree(cand);
    std::size_t dim = cand.lie.dim();
    if (!rep.verdict()) v.fail(config_name(c) + " failed " + rep.to_json().dump());
    if (rep.central.enveloping_dim != dim * dim) v.fail(config_name(c) + " enveloping dimension " + std::to_string(rep.central.enveloping_dim));
    d << config_name(c) << " env " << rep.central.enveloping_dim << " ";
  }
  if (v.pass) v.detail = d.str();
  return v;
}

// Checks that columns of `iso` carry the brackets of `source` to those of W(1;1) over the
// same field, recomputed from scratch.
template <ScalarRing F>
bool carries_brackets(const LieData<F>& source, const Matrix<F>& iso, const F& field) {
  auto W = witt_algebra(5, {1}, field);
  if (iso.rows != W.dim() || iso.cols != source.dim()) return false;
  if (!inverse(field, iso)) return false;
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = i + 1; j < source.dim(); ++j) {
      auto lhs = mat::apply(field, iso, source.bracket_basis(i, j));
      auto rhs = W.bracket(mat::column(iso, i), mat::column(iso, j));
      if (!vec_equal(field, lhs, rhs)) return false;
    }
  return true;
}

// 8. The purely inseparable form is a non-split Witt-Ree algebra that splits after base change.
Verdict criterion_twisted() {
  Verdict v;
  Stopwatch sw;
  auto ree = ree_form(5, 1);
  auto rep = verify_witt_ree(ree);
  if (!(rep.wr1 && rep.wr2 && rep.wr3)) v.fail("ree form fails the axioms");
  auto rec = recognize_w1n(ree);
  if (rec.split) v.fail("ree form recognized as split");
  if (rec.certificate.value("reason", "") != "inseparable_char_poly") v.fail("ree form failure is not inseparability");
  bool threw = false;
  try {
    eigen_decompose(ree.algebra, ree.generators[0].matrix());
  } catch (const inseparable_char_poly&) {
    threw = true;
  }
  if (!threw) v.fail("eigen decomposition did not report inseparability");
  auto triv = trivialize_insep(ree);
  if (!triv.iso.split || !triv.iso.iso) v.fail("trivialization did not split");
  else if (!carries_brackets(triv.extended.lie, *triv.iso.iso, triv.extended.field())) v.fail("trivialized structure constants differ");
  PrimeField F(5);
  auto mult = multiplicative_form(F, {F.one()});
  auto mrec = recognize_w1n(mult);
  if (!mrec.split || !mrec.iso) v.fail("multiplicative form not recognized");
  else if (!carries_brackets(mult.lie, *mrec.iso, F)) v.fail("multiplicative structure constants differ");
  double t = sw.seconds();
  if (t >= kTwistedBudget) v.fail("exceeded time budget");
  if (v.pass) v.detail = "non-split ree form, split after base change, multiplicative form split (" + std::to_string(t).substr(0, 4) + " s)";
  return v;
}

template <ScalarRing R>
void unipotence_round(const R& ring, const std::vector<int>& n, std::mt19937_64& rng, Verdict& v, std::size_t& worst) {
  DPAlgebra<R> a(5, n, ring);
  std::size_t d = a.dim();
  for (int k = 0; k < kUnipotentSamples; ++k) {
    auto g = random_g_plus(a, rng);
    auto N = g.matrix();
    for (std::size_t i = 0; i < d; ++i) N(i, i) = ring.sub(N(i, i), ring.one());
    auto P = N;
    std::size_t index = 1;
    while (!mat::is_zero(ring, P) && index <= d) {
      P = mat::mul(ring, P, N);
      ++index;
    }
    if (!mat::is_zero(ring, P)) v.fail("matrix minus identity is not nilpotent");
    worst = std::max(worst, index);
  }
}

// 9. G+ elements are unipotent with nilpotency index at most dim A.
Verdict criterion_unipotence() {
  Verdict v;
  std::mt19937_64 rng(9);
  std::size_t worst = 0;
  for (const auto& n : kTriangulationShapes) {
    unipotence_round(PrimeField(5), n, rng, v, worst);
    unipotence_round(TR(PrimeField(5), 1), n, rng, v, worst);
  }
  if (v.pass) v.detail = "max nilpotency index " + std::to_string(worst);
  return v;
}

// [x^(a) d_i, x^(b) d_j] = x^(a) x^(b - e_i) d_j - x^(b) x^(a - e_j) d_i with
// x^(c) x^(e) = prod_k binom(c_k + e_k, c_k) x^(c + e) inside the box.
Vec<PrimeField> witt_bracket_formula(const DPAlgebra<PrimeField>& a, std::size_t i, std::size_t ia, std::size_t j,
                                     std::size_t jb) {
  const auto& F = a.ring();
  std::size_t d = a.dim();
  Vec<PrimeField> out(a.m() * d, F.zero());
  auto term = [&](std::size_t left, std::size_t right, std::size_t lower, std::size_t target, bool minus) {
    MultiIndex c = a.multi_index(left), e = a.multi_index(right);
    if (e[lower] == 0) return;
    e[lower] -= 1;
    std::uint64_t coeff = 1;
    MultiIndex sum(a.m());
    for (std::size_t k = 0; k < a.m(); ++k) {
      sum[k] = c[k] + e[k];
      if (sum[k] >= power(a.p(), static_cast<std::uint64_t>(a.n()[k]))) return;
      coeff = coeff * binomial_mod(sum[k], c[k], a.p()) % a.p();
    }
    auto val = F.from_int(static_cast<std::int64_t>(coeff));
    auto& slot = out[target * d + a.index_of(sum)];
    slot = minus ? F.sub(slot, val) : F.add(slot, val);
  };
  term(ia, jb, i, j, false);
  term(jb, ia, j, i, true);
  return out;
}

// 10. Stored structure constants agree with operator commutators and the closed bracket formula.
Verdict criterion_oracle() {
  Verdict v;
  std::size_t pairs = 0;
  for (const auto& c : kShipped) {
    PrimeField F(c.p);
    DPAlgebra<PrimeField> a(c.p, c.n, F);
    auto L = witt_algebra(a);
    std::size_t d = a.dim();
    std::vector<Matrix<PrimeField>> ops;
    for (std::size_t i = 0; i < a.m(); ++i)
      for (std::size_t u = 0; u < d; ++u) ops.push_back(witt_basis_operator(a, i, u));
    for (std::size_t k = 0; k < L.dim(); ++k)
      for (std::size_t l = 0; l < L.dim(); ++l) {
        auto stored = L.bracket_basis(k, l);
        auto comm = mat::sub(F, mat::mul(F, ops[k], ops[l]), mat::mul(F, ops[l], ops[k]));
        Matrix<PrimeField> expanded(F, d, d);
        for (std::size_t t = 0; t < stored.size(); ++t)
          if (!F.is_zero(stored[t])) expanded = mat::add(F, expanded, mat::scale(F, stored[t], ops[t]));
        if (!mat::equal(F, comm, expanded)) v.fail(config_name(c) + " commutator mismatch at " + L.label(k) + "," + L.label(l));
        auto formula = witt_bracket_formula(a, k / d, k % d, l / d, l % d);
        if (!vec_equal(F, stored, formula)) v.fail(config_name(c) + " formula mismatch at " + L.label(k) + "," + L.label(l));
        ++pairs;
      }
  }
  if (v.pass) v.detail = std::to_string(pairs) + " ordered basis pairs";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {"dimension formulas", criterion_dimensions},
      {"simplicity", criterion_simplicity},
      {"artin-hasse identities", criterion_artin_hasse},
      {"congruence suite", criterion_congruences},
      {"triangulation existence and uniqueness", criterion_triangulation},
      {"dp and derivation-automorphism checks agree", criterion_check_equivalence},
      {"witt-ree canonical pass", criterion_witt_ree},
      {"twisted-form dichotomy", criterion_twisted},
      {"unipotence of G+", criterion_unipotence},
      {"oracle equivalence", criterion_oracle},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v;
    try {
      v = criteria[k].run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    if (!v.pass) ++failures;
    std::printf("[%s] %2zu %s: %s\n", v.pass ? "PASS" : "FAIL", k + 1, criteria[k].name, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
