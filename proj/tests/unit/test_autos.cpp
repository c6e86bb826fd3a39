#include <gtest/gtest.h>

#include <random>

#include "wittalg/autos.hpp"
#include "wittalg/dpalg.hpp"
#include "wittalg/lie.hpp"
#include "wittalg/scalars.hpp"

using namespace wittalg;

namespace {

using TR = TestRing<PrimeField>;

struct Shape {
  std::vector<int> n;
};
const std::vector<Shape> kShapes = {{{1}}, {{2}}, {{1, 1}}};

std::int64_t small_factorial(std::size_t l) {
  std::int64_t f = 1;
  for (std::size_t k = 2; k <= l; ++k) f *= static_cast<std::int64_t>(k);
  return f;
}

TR eps_ring(std::uint32_t p) { return make_test_ring(PrimeField(p), 1); }

template <class R>
Vec<R> linear(const DPAlgebra<R>& a, std::vector<typename R::value_type> coeffs) {
  auto v = a.monomial_algebra().zero();
  for (std::size_t i = 0; i < coeffs.size(); ++i) v[a.generator_index(i, 0)] = coeffs[i];
  return v;
}

template <class R>
typename AlgebraMorphism<R>::Images identity_images(const DPAlgebra<R>& a) {
  typename AlgebraMorphism<R>::Images im(a.m());
  for (std::size_t i = 0; i < a.m(); ++i)
    for (int s = 0; s < a.n()[i]; ++s) im[i].push_back(a.to_dense(a.generator(i, static_cast<std::size_t>(s))));
  return im;
}

// Closed form of E_p(c d_i^{p^s}) on x_j^(p^u).
template <class R>
Vec<R> artin_hasse_oracle(const DPAlgebra<R>& a, std::size_t i, std::size_t s, const typename R::value_type& c,
                          std::size_t j, std::size_t u) {
  const auto& ring = a.ring();
  if (j != i || u < s) return a.to_dense(a.generator(j, u));
  auto out = a.monomial_algebra().zero();
  std::uint64_t top = ipow(a.p(), u), step = ipow(a.p(), s);
  auto cl = ring.one();
  auto fact = ring.one();
  for (std::uint32_t l = 0; l < a.p() && l * step <= top; ++l) {
    if (l > 0) {
      cl = ring.mul(cl, c);
      fact = ring.mul(fact, ring.from_int(l));
    }
    MultiIndex e(a.m(), 0);
    e[i] = top - l * step;
    auto idx = a.index_of(e);
    out[idx] = ring.add(out[idx], ring.mul(cl, *ring.inverse(fact)));
  }
  return out;
}

}  // namespace

TEST(Morphism, IdentityImages) {
  DPAlgebra<PrimeField> a(5, {2}, PrimeField(5));
  auto phi = morphism_from_generator_images(a, identity_images(a));
  EXPECT_TRUE(phi.equal(AlgebraMorphism<PrimeField>::identity(a)));
}

TEST(Morphism, TranslationOverTestRing) {
  auto R = eps_ring(5);
  DPAlgebra<TR> a(5, {1}, R);
  auto img = a.to_dense(a.x(0));
  img[0] = R.epsilon(0);
  auto phi = morphism_from_generator_images(a, {{img}});
  // x^(k) -> (x + e)^k / k!
  for (std::size_t k = 0; k < 5; ++k) {
    auto expect = a.monomial_algebra().zero();
    for (std::size_t l = 0; l <= k; ++l) expect[k - l] = R.mul(ring_pow(R, R.epsilon(0), l), *R.inverse(R.from_int(static_cast<std::int64_t>(small_factorial(l)))));
    EXPECT_TRUE(a.monomial_algebra().equal(mat::column(phi.matrix(), k), expect)) << k;
  }
}

TEST(Morphism, RelationViolated) {
  PrimeField F(5);
  DPAlgebra<PrimeField> a(5, {1}, F);
  auto img = a.to_dense(a.x(0));
  img[0] = F.one();
  EXPECT_THROW(morphism_from_generator_images(a, {{img}}), relation_violated);
}

TEST(Morphism, SingularImagesRejected) {
  PrimeField F(5);
  DPAlgebra<PrimeField> a(5, {1, 1}, F);
  auto im = identity_images(a);
  im[1][0] = im[0][0];
  EXPECT_THROW(morphism_from_generator_images(a, im), not_invertible);
}

TEST(Morphism, FromMatrixChecksMultiplicativity) {
  PrimeField F(5);
  DPAlgebra<PrimeField> a(5, {1}, F);
  auto m = mat::identity(F, a.dim());
  EXPECT_NO_THROW(AlgebraMorphism<PrimeField>::from_matrix(a, m));
  m(1, 1) = F.from_int(2);
  EXPECT_THROW(AlgebraMorphism<PrimeField>::from_matrix(a, m), invalid_argument);
  auto phi = g_zero_point(a, Matrix<PrimeField>(F, 1, 1, {F.from_int(3)}));
  EXPECT_TRUE(AlgebraMorphism<PrimeField>::from_matrix(a, phi.matrix()).equal(phi));
}

TEST(Morphism, ComposeInvertAssociativity) {
  auto R = eps_ring(5);
  for (const auto& sh : kShapes) {
    DPAlgebra<TR> a(5, sh.n, R);
    auto id = AlgebraMorphism<TR>::identity(a);
    EXPECT_TRUE(invert(id).equal(id));
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto f = random_derivation_automorphism(a, 3 * seed);
      auto g = random_derivation_automorphism(a, 3 * seed + 1);
      auto h = random_derivation_automorphism(a, 3 * seed + 2);
      EXPECT_TRUE(compose(f, compose(g, h)).equal(compose(compose(f, g), h)));
      EXPECT_TRUE(compose(f, invert(f)).equal(id));
    }
  }
}

TEST(Morphism, JsonRoundTrip) {
  auto R = eps_ring(5);
  DPAlgebra<TR> a(5, {2}, R);
  auto phi = random_derivation_automorphism(a, 11);
  auto back = AlgebraMorphism<TR>::from_json(a, phi.to_json());
  EXPECT_TRUE(back.equal(phi));
}

TEST(ArtinHasse, ZeroIsIdentity) {
  PrimeField F(5);
  DPAlgebra<PrimeField> a(5, {2}, F);
  EXPECT_TRUE(artin_hasse_auto(a, 0, 1, F.zero()).equal(AlgebraMorphism<PrimeField>::identity(a)));
}

TEST(ArtinHasse, NilpotenceRequired) {
  PrimeField F(5);
  DPAlgebra<PrimeField> a(5, {1}, F);
  EXPECT_THROW(artin_hasse_auto(a, 0, 0, F.one()), not_p_nilpotent);
}

TEST(ArtinHasse, ClosedFormOnGenerators) {
  auto R = make_test_ring(PrimeField(5), 2);
  std::mt19937_64 rng(5);
  for (const auto& n : std::vector<std::vector<int>>{{2}, {1, 1}, {2, 1}}) {
    DPAlgebra<TR> a(5, n, R);
    for (std::size_t i = 0; i < a.m(); ++i)
      for (int s = 0; s < a.n()[i]; ++s) {
        auto c = R.random_nilpotent(rng);
        auto phi = artin_hasse_auto(a, i, static_cast<std::size_t>(s), c);
        for (std::size_t j = 0; j < a.m(); ++j)
          for (int u = 0; u < a.n()[j]; ++u)
            EXPECT_TRUE(a.monomial_algebra().equal(
                phi.image(j, static_cast<std::size_t>(u)),
                artin_hasse_oracle(a, i, static_cast<std::size_t>(s), c, j, static_cast<std::size_t>(u))));
      }
  }
}

TEST(GMinus, ZeroPointIsIdentity) {
  auto R = eps_ring(5);
  DPAlgebra<TR> a(5, {2, 1}, R);
  WittKernelPoint<TR> z{{{R.zero(), R.zero()}, {R.zero()}}};
  EXPECT_TRUE(g_minus_point(a, z).equal(AlgebraMorphism<TR>::identity(a)));
}

TEST(GMinus, TranslatesCoordinate) {
  auto R = eps_ring(5);
  DPAlgebra<TR> a(5, {1}, R);
  auto phi = g_minus_point(a, WittKernelPoint<TR>{{{R.epsilon(0)}}});
  auto expect = a.to_dense(a.x(0));
  expect[0] = R.epsilon(0);
  EXPECT_TRUE(a.monomial_algebra().equal(phi.image(0, 0), expect));
}

TEST(GMinus, InverseIsNegation) {
  auto R = make_test_ring(PrimeField(5), 2);
  std::mt19937_64 rng(9);
  for (const auto& sh : kShapes) {
    DPAlgebra<TR> a(5, sh.n, R);
    auto pt = random_kernel_point(a, rng);
    auto phi = g_minus_point(a, pt);
    auto neg = g_minus_point(a, negate(R, pt));
    EXPECT_TRUE(invert(phi).equal(neg));
    EXPECT_TRUE(compose(phi, neg).equal(AlgebraMorphism<TR>::identity(a)));
  }
}

TEST(GZero, IdentityAndScalar) {
  PrimeField F(7);
  DPAlgebra<PrimeField> a(7, {2}, F);
  auto id = g_zero_point(a, mat::identity(F, 1));
  EXPECT_TRUE(id.equal(AlgebraMorphism<PrimeField>::identity(a)));
  auto c = F.from_int(3);
  auto phi = g_zero_point(a, Matrix<PrimeField>(F, 1, 1, {c}));
  for (std::size_t k = 0; k < a.dim(); ++k) {
    auto expect = a.monomial_algebra().scale(ring_pow(F, c, k), a.monomial_algebra().basis(k));
    EXPECT_TRUE(a.monomial_algebra().equal(mat::column(phi.matrix(), k), expect));
  }
}

TEST(GZero, SwapFixesMixedMonomial) {
  PrimeField F(5);
  DPAlgebra<PrimeField> a(5, {1, 1}, F);
  Matrix<PrimeField> swap(F, 2, 2, {F.zero(), F.one(), F.one(), F.zero()});
  auto phi = g_zero_point(a, swap);
  auto mono = a.monomial_algebra();
  EXPECT_TRUE(mono.equal(phi.image(0, 0), a.to_dense(a.x(1))));
  EXPECT_TRUE(mono.equal(phi.image(1, 0), a.to_dense(a.x(0))));
  auto idx = a.index_of({1, 1});
  EXPECT_TRUE(mono.equal(mat::column(phi.matrix(), idx), mono.basis(idx)));
}

TEST(GZero, SingularRejected) {
  PrimeField F(5);
  DPAlgebra<PrimeField> a(5, {1, 1}, F);
  EXPECT_THROW(g_zero_point(a, Matrix<PrimeField>(F, 2, 2, {1, 2, 2, 4})), not_invertible);
}

TEST(DerivationAutomorphism, SubgroupsPass) {
  auto R = eps_ring(5);
  std::mt19937_64 rng(3);
  for (const auto& sh : kShapes) {
    DPAlgebra<TR> a(5, sh.n, R);
    EXPECT_TRUE(is_derivation_automorphism(AlgebraMorphism<TR>::identity(a), true));
    auto gm = g_minus_point(a, random_kernel_point(a, rng));
    auto gz = g_zero_point(a, random_invertible_matrix(R, a.m(), rng));
    auto gp = random_g_plus(a, rng);
    for (const auto* phi : {&gm, &gz, &gp}) {
      EXPECT_TRUE(is_derivation_automorphism(*phi));
      EXPECT_TRUE(is_derivation_automorphism(*phi, true));
    }
    EXPECT_TRUE(is_dp_automorphism(gz));
    EXPECT_TRUE(is_dp_automorphism(gp));
    EXPECT_TRUE(is_dp_automorphism(AlgebraMorphism<TR>::identity(a)));
  }
}

TEST(DerivationAutomorphism, NonDPSubstitutionFails) {
  PrimeField F(5);
  DPAlgebra<PrimeField> a(5, {2}, F);
  auto im = identity_images(a);
  im[0][1] = a.monomial_algebra().add(im[0][1], a.to_dense(a.x(0)));
  auto phi = morphism_from_generator_images(a, im);
  EXPECT_FALSE(is_derivation_automorphism(phi));
  EXPECT_FALSE(is_derivation_automorphism(phi, true));
  auto check = dp_automorphism_check(phi);
  EXPECT_TRUE(check.preserves_ideal);
  EXPECT_FALSE(check.ok());
}

TEST(DerivationAutomorphism, TranslationNotDP) {
  auto R = eps_ring(5);
  DPAlgebra<TR> a(5, {1}, R);
  auto phi = g_minus_point(a, WittKernelPoint<TR>{{{R.epsilon(0)}}});
  auto check = dp_automorphism_check(phi);
  EXPECT_FALSE(check.preserves_ideal);
  EXPECT_FALSE(check.reason.empty());
}

// Ideal-preserving automorphisms from arbitrary generator images: both criteria agree.
TEST(DerivationAutomorphism, DPCheckAgrees) {
  PrimeField F(5);
  std::mt19937_64 rng(21);
  int dp_count = 0, non_dp_count = 0;
  for (const auto& sh : kShapes) {
    DPAlgebra<PrimeField> a(5, sh.n, F);
    for (int trial = 0; trial < 40; ++trial) {
      typename AlgebraMorphism<PrimeField>::Images im(a.m());
      bool sparse = trial % 2 == 0;
      for (std::size_t i = 0; i < a.m(); ++i)
        for (int s = 0; s < a.n()[i]; ++s) {
          auto v = a.to_dense(a.generator(i, static_cast<std::size_t>(s)));
          for (std::size_t idx = 1; idx < a.dim(); ++idx)
            if (!sparse || rng() % 4 == 0) v[idx] = F.add(v[idx], F.random(rng));
          if (sparse && trial % 4 == 0) {
            v = a.monomial_algebra().zero();
            v[a.generator_index(i, static_cast<std::size_t>(s))] = F.one();
          }
          im[i].push_back(v);
        }
      std::optional<AlgebraMorphism<PrimeField>> phi;
      try {
        phi = morphism_from_generator_images(a, im);
      } catch (const not_invertible&) {
        continue;
      }
      bool der = is_derivation_automorphism(*phi, true);
      bool dp = is_dp_automorphism(*phi);
      EXPECT_EQ(der, dp);
      (dp ? dp_count : non_dp_count)++;
    }
    for (int trial = 0; trial < 10; ++trial) {
      auto gp = random_g_plus(a, rng);
      auto gz = g_zero_point(a, random_invertible_matrix(F, a.m(), rng));
      auto phi = compose(gp, gz);
      EXPECT_TRUE(is_derivation_automorphism(phi, true));
      EXPECT_TRUE(is_dp_automorphism(phi));
      dp_count++;
    }
  }
  EXPECT_GT(dp_count, 0);
  EXPECT_GT(non_dp_count, 0);
}

TEST(Pushforward, IdentityAndScaling) {
  PrimeField F(5);
  DPAlgebra<PrimeField> a(5, {1}, F);
  auto d = Derivation<PrimeField>::partial(a.monomial_algebra(), 0);
  EXPECT_TRUE(pushforward(AlgebraMorphism<PrimeField>::identity(a), d).equal(d));
  auto c = F.from_int(3);
  auto phi = g_zero_point(a, Matrix<PrimeField>(F, 1, 1, {c}));
  auto pushed = pushforward(phi, d);
  EXPECT_TRUE(pushed.equal(d.scaled_by(a.monomial_algebra().scalar(*F.inverse(c)))));
}

TEST(Pushforward, RejectsNonDerivationAutomorphism) {
  PrimeField F(5);
  DPAlgebra<PrimeField> a(5, {2}, F);
  auto im = identity_images(a);
  im[0][1] = a.monomial_algebra().add(im[0][1], a.to_dense(a.x(0)));
  auto phi = morphism_from_generator_images(a, im);
  EXPECT_THROW(pushforward(phi, Derivation<PrimeField>::partial(a.monomial_algebra(), 0)),
               not_derivation_automorphism);
}

TEST(Pushforward, PreservesBrackets) {
  auto R = eps_ring(5);
  for (const auto& sh : kShapes) {
    DPAlgebra<TR> a(5, sh.n, R);
    const auto& mono = a.monomial_algebra();
    auto phi = random_derivation_automorphism(a, 77);
    std::vector<Derivation<TR>> basis;
    for (std::size_t i = 0; i < a.m(); ++i)
      for (std::size_t idx = 0; idx < a.dim(); ++idx)
        basis.push_back(Derivation<TR>::partial(mono, i).scaled_by(mono.basis(idx)));
    std::vector<Derivation<TR>> pushed;
    for (const auto& d : basis) pushed.push_back(pushforward(phi, d));
    std::size_t stride = basis.size() > 10 ? 19 : 1;
    for (std::size_t u = 0; u < basis.size(); u += stride > 1 ? 3 : 1)
      for (std::size_t v = u + 1; v < basis.size(); v += stride)
        EXPECT_TRUE(pushforward(phi, bracket(basis[u], basis[v])).equal(bracket(pushed[u], pushed[v])));
  }
}

TEST(Triangulate, IdentityAndMinus) {
  auto R = eps_ring(5);
  std::mt19937_64 rng(4);
  for (const auto& sh : kShapes) {
    DPAlgebra<TR> a(5, sh.n, R);
    auto id = AlgebraMorphism<TR>::identity(a);
    auto dec = triangulate(id);
    EXPECT_TRUE(dec.plus.equal(id));
    EXPECT_TRUE(mat::equal(R, dec.zero, mat::identity(R, a.m())));
    for (const auto& row : dec.minus.entries)
      for (const auto& v : row) EXPECT_TRUE(R.is_zero(v));
    auto pt = random_kernel_point(a, rng);
    auto dm = triangulate(g_minus_point(a, pt));
    EXPECT_TRUE(dm.same_as(TriangularDecomposition<TR>{id, mat::identity(R, a.m()), pt}));
  }
}

TEST(Triangulate, MinusClosure) {
  auto R = make_test_ring(PrimeField(5), 2);
  std::mt19937_64 rng(8);
  for (const auto& sh : kShapes) {
    DPAlgebra<TR> a(5, sh.n, R);
    for (int t = 0; t < 5; ++t) {
      auto phi = compose(g_minus_point(a, random_kernel_point(a, rng)), g_minus_point(a, random_kernel_point(a, rng)));
      auto dec = triangulate(phi);
      EXPECT_TRUE(dec.plus.equal(AlgebraMorphism<TR>::identity(a)));
      EXPECT_TRUE(mat::equal(R, dec.zero, mat::identity(R, a.m())));
      EXPECT_TRUE(g_minus_point(a, dec.minus).equal(phi));
    }
  }
}

TEST(Triangulate, RoundTrip) {
  auto check = [](const auto& ring, std::uint32_t p) {
    using R = std::decay_t<decltype(ring)>;
    for (const auto& sh : kShapes) {
      DPAlgebra<R> a(p, sh.n, ring);
      for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto parts = random_decomposition(a, seed);
        auto phi = parts.reassemble();
        auto dec = triangulate(phi);
        EXPECT_TRUE(dec.same_as(parts)) << "seed " << seed;
        EXPECT_TRUE(dec.reassemble().equal(phi));
        EXPECT_TRUE(triangulate(dec.reassemble()).same_as(dec));
      }
    }
  };
  check(PrimeField(5), 5);
  check(eps_ring(5), 5);
  check(PrimeField(7), 7);
}

TEST(Triangulate, RejectsNonDerivationAutomorphism) {
  PrimeField F(5);
  DPAlgebra<PrimeField> a(5, {2}, F);
  auto im = identity_images(a);
  im[0][1] = a.monomial_algebra().add(im[0][1], a.to_dense(a.x(0)));
  EXPECT_THROW(triangulate(morphism_from_generator_images(a, im)), not_derivation_automorphism);
}

TEST(Triangulate, JsonShape) {
  auto R = eps_ring(5);
  DPAlgebra<TR> a(5, {1, 1}, R);
  auto j = triangulate(random_derivation_automorphism(a, 2)).to_json();
  EXPECT_EQ(j["minus"].size(), 2u);
  EXPECT_EQ(j["zero"].size(), 2u);
  EXPECT_EQ(j["zero"][0].size(), 2u);
  EXPECT_EQ(j["plus"].size(), 2u);
}

TEST(RandomAutomorphism, Deterministic) {
  auto R = eps_ring(5);
  DPAlgebra<TR> a(5, {2}, R);
  EXPECT_EQ(random_derivation_automorphism(a, 42).to_json().dump(), random_derivation_automorphism(a, 42).to_json().dump());
  EXPECT_NE(random_derivation_automorphism(a, 42).to_json().dump(), random_derivation_automorphism(a, 43).to_json().dump());
}

TEST(RandomAutomorphism, FieldHasTrivialMinus) {
  PrimeField F(5);
  for (const auto& sh : kShapes) {
    DPAlgebra<PrimeField> a(5, sh.n, F);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto phi = random_derivation_automorphism(a, seed);
      EXPECT_TRUE(is_derivation_automorphism(phi));
      for (const auto& row : triangulate(phi).minus.entries)
        for (auto v : row) EXPECT_TRUE(F.is_zero(v));
    }
  }
}

TEST(GPlus, Unipotent) {
  PrimeField F(5);
  std::mt19937_64 rng(13);
  for (const auto& sh : kShapes) {
    DPAlgebra<PrimeField> a(5, sh.n, F);
    for (int t = 0; t < 10; ++t) {
      auto gp = random_g_plus(a, rng);
      auto nil = mat::sub(F, gp.matrix(), mat::identity(F, a.dim()));
      EXPECT_TRUE(mat::is_zero(F, mat::power(F, nil, a.dim())));
    }
  }
}
