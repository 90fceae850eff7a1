#include "doctest.h"
#include "qtorus/cochain.hpp"
#include "qtorus/error.hpp"
#include "qtorus/samples.hpp"

using namespace qtorus;

namespace {

SymmetricForm scaled_identity(std::size_t r, long n) {
  FracMatrix m(r, std::vector<Frac1>(r));
  for (std::size_t i = 0; i < r; ++i) m[i][i] = Frac1(1, n);
  return SymmetricForm(m);
}

IntVector unit(std::size_t n, std::size_t i) {
  IntVector e(n);
  e[i] = 1;
  return e;
}

// A twisted 0-cochain with random values, for building coboundaries.
TwistedCochain random_zero_cochain(Rng& rng, const TriangulatedSurface& t, std::size_t r) {
  std::vector<IntVector> values;
  for (std::size_t v = 0; v < t.count(0); ++v) values.push_back(random_matrix(rng, r, 1, -4, 4).column(0));
  return TwistedCochain(0, r, values);
}

}  // namespace

TEST_SUITE("cochain") {

TEST_CASE("triangulations are valid closed surfaces") {
  for (std::size_t g = 1; g <= 3; ++g) {
    const TriangulatedSurface t = triangulate(g);
    CHECK(t.euler_characteristic() == 2 - 2 * static_cast<int>(g));
    CHECK(t.edges_have_two_cofaces());
    CHECK(t.fundamental_cycle_closed());
    CHECK(t.vertex_links_are_circles());
    CHECK(t.count(2) == 4 * g);
  }
  CHECK_THROWS_AS(triangulate(0), Error);
}

TEST_CASE("cocycle examples") {
  const TriangulatedSurface t = triangulate(1);
  const LatticeLocalSystem triv = LatticeLocalSystem::trivial(1, 1);
  CHECK(cocycle_check(TwistedCochain(1, 1, t.count(1)), t, triv));
  TwistedCochain constant(0, 1, t.count(0));
  for (std::size_t v = 0; v < t.count(0); ++v) constant.value(v) = make_vector({5});
  CHECK(coboundary(constant, t, triv).is_zero());
  CHECK(cocycle_check(class_of(make_vector({1, 0}), t, triv), t, triv));
}

TEST_CASE("coboundary squares to zero") {
  Rng rng(97);
  for (int k = 0; k < 20; ++k) {
    const std::size_t g = uniform(rng, 1, 2), r = uniform(rng, 1, 2);
    const LatticeLocalSystem rho = random_local_system(rng, g, r);
    const TriangulatedSurface t = triangulate(g);
    const TwistedCochain c0 = random_zero_cochain(rng, t, r);
    CHECK(cocycle_check(coboundary(c0, t, rho), t, rho));
  }
}

TEST_CASE("cup products on the torus fix the orientation") {
  const TriangulatedSurface t = triangulate(1);
  const LatticeLocalSystem triv = LatticeLocalSystem::trivial(1, 1);
  const TwistedCochain alpha_a = class_of(make_vector({1, 0}), t, triv);
  const TwistedCochain alpha_b = class_of(make_vector({0, 1}), t, triv);
  for (long n : {1L, 2L, 5L}) {
    const SymmetricForm p = scaled_identity(1, n);
    CHECK(cup_evaluate(alpha_a, alpha_b, p, t, triv) == Frac1(orientation_sign, n));
    CHECK(cup_evaluate(alpha_b, alpha_a, p, t, triv) == Frac1(-orientation_sign, n));
    CHECK(cup_evaluate(alpha_a, alpha_a, p, t, triv).is_zero());
  }
  CHECK(cup_evaluate(alpha_a, TwistedCochain(1, 1, t.count(1)), scaled_identity(1, 3), t, triv).is_zero());
  // Integral pairing: value 1 in Q/Z is 0, so check through a fine scale instead.
  CHECK(cup_evaluate(alpha_a, alpha_b, scaled_identity(1, 1000), t, triv) == Frac1(1, 1000));
}

TEST_CASE("intersection form in genus two") {
  const TriangulatedSurface t = triangulate(2);
  const LatticeLocalSystem triv = LatticeLocalSystem::trivial(2, 1);
  const SymmetricForm p = scaled_identity(1, 7);
  std::vector<TwistedCochain> alpha;
  for (std::size_t j = 0; j < 4; ++j) alpha.push_back(class_of(unit(4, j), t, triv));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      long expected = 0;
      if (i / 2 == j / 2 && i != j) expected = i % 2 == 0 ? 1 : -1;
      CHECK(cup_evaluate(alpha[i], alpha[j], p, t, triv) == Frac1(expected, 7));
    }
}

TEST_CASE("class_of and holonomies are inverse") {
  for (MonodromyFamily fam : {MonodromyFamily::Trivial, MonodromyFamily::Sign, MonodromyFamily::Unipotent})
    for (std::size_t g = 1; g <= 2; ++g)
      for (std::size_t r = 1; r <= 2; ++r) {
        const LatticeLocalSystem rho = family_system(fam, g, r);
        const TriangulatedSurface t = triangulate(g);
        const IntMatrix kernel = kernel_basis(build_complex(rho).d1);
        for (std::size_t k = 0; k < kernel.cols(); ++k) {
          const TwistedCochain c = class_of(kernel.column(k), t, rho);
          CHECK(cocycle_check(c, t, rho));
          CHECK(holonomies(c, t, rho) == kernel.column(k));
        }
        CHECK(class_of(IntVector(2 * g * r), t, rho).is_zero());
      }
}

TEST_CASE("class_of rejects vectors outside the kernel") {
  const LatticeLocalSystem sign = family_system(MonodromyFamily::Sign, 1, 1);
  try {
    class_of(make_vector({1, 0}), triangulate(1), sign);
    FAIL("expected NotInKernel");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInKernel);
  }
}

TEST_CASE("cup evaluation needs cocycles of matching shape") {
  const TriangulatedSurface t = triangulate(1);
  const LatticeLocalSystem triv = LatticeLocalSystem::trivial(1, 1);
  TwistedCochain bad(1, 1, t.count(1));
  bad.value(0) = make_vector({1});
  const TwistedCochain good = class_of(make_vector({1, 0}), t, triv);
  try {
    cup_evaluate(bad, good, scaled_identity(1, 2), t, triv);
    FAIL("expected NotACocycle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotACocycle);
  }
  CHECK_THROWS_AS(cup_evaluate(good, good, scaled_identity(2, 2), t, triv), Error);
}

TEST_CASE("cup evaluation is bilinear, antisymmetric and blind to coboundaries") {
  Rng rng(101);
  for (MonodromyFamily fam : {MonodromyFamily::Trivial, MonodromyFamily::Sign, MonodromyFamily::Unipotent})
    for (std::size_t g = 1; g <= 2; ++g)
      for (std::size_t r = 1; r <= 2; ++r) {
        const LatticeLocalSystem rho = family_system(fam, g, r);
        const TriangulatedSurface t = triangulate(g);
        const QuadraticForm q = random_invariant_form(rng, rho, 6);
        const SymmetricForm p = polarize(q);
        const IntMatrix kernel = kernel_basis(build_complex(rho).d1);
        std::vector<TwistedCochain> cs;
        for (std::size_t k = 0; k < kernel.cols(); ++k) cs.push_back(class_of(kernel.column(k), t, rho));
        for (std::size_t i = 0; i < cs.size(); ++i)
          for (std::size_t j = 0; j < cs.size(); ++j) {
            const Frac1 v = cup_evaluate(cs[i], cs[j], p, t, rho);
            CHECK(v == -cup_evaluate(cs[j], cs[i], p, t, rho));
            for (std::size_t k = 0; k < cs.size(); ++k)
              CHECK(cup_evaluate(cs[i] + cs[k], cs[j], p, t, rho) == v + cup_evaluate(cs[k], cs[j], p, t, rho));
            const TwistedCochain shifted = cs[i] + coboundary(random_zero_cochain(rng, t, r), t, rho);
            CHECK(cup_evaluate(shifted, cs[j], p, t, rho) == v);
          }
      }
}

}  // TEST_SUITE
