#include "doctest.h"
#include "oracles.hpp"
#include "qtorus/error.hpp"
#include "qtorus/samples.hpp"
#include "qtorus/surface.hpp"

using namespace qtorus;

namespace {

LatticeLocalSystem sign_system() { return LatticeLocalSystem(1, 1, {IntMatrix{{1}}, IntMatrix{{-1}}}); }

long euler(const TwistedCohomology& h) {
  return static_cast<long>(h.h0.free_rank()) - static_cast<long>(h.h1.free_rank()) +
         static_cast<long>(h.h2.free_rank());
}

}  // namespace

TEST_SUITE("surface") {

TEST_CASE("surface relator") {
  const SurfaceGroup g2(2);
  CHECK(g2.relator().size() == 8);
  CHECK(g2.relator()[0] == Letter{0, 1});
  CHECK(g2.relator()[3] == Letter{1, -1});
  CHECK(SurfaceGroup::generator_name(3) == "b2");
  CHECK(SurfaceGroup(0).relator().empty());
}

TEST_CASE("fox derivative examples") {
  Rng rng(71);
  const LatticeLocalSystem rho = random_local_system(rng, 1, 2);
  CHECK(fox_derivative(Word{Letter{0, 1}}, 0, rho) == IntMatrix::identity(2));
  CHECK(fox_derivative(Word{Letter{0, -1}}, 0, rho) == -rho.inverse(0));
  const LatticeLocalSystem triv = LatticeLocalSystem::trivial(1, 1);
  const Word r = SurfaceGroup(1).relator();
  CHECK(fox_derivative(r, 0, triv).is_zero());
  CHECK(fox_derivative(r, 1, triv).is_zero());
  CHECK_THROWS_AS(fox_derivative(r, 2, triv), Error);
}

TEST_CASE("fox derivative obeys the product rule") {
  Rng rng(73);
  for (int t = 0; t < 30; ++t) {
    const LatticeLocalSystem rho = random_local_system(rng, 2, 2);
    Word u, v;
    for (int k = 0; k < 4; ++k) {
      u.push_back(Letter{static_cast<std::size_t>(uniform(rng, 0, 3)), uniform(rng, 0, 1) ? 1 : -1});
      v.push_back(Letter{static_cast<std::size_t>(uniform(rng, 0, 3)), uniform(rng, 0, 1) ? 1 : -1});
    }
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(fox_derivative(uv, j, rho) == fox_derivative(u, j, rho) + rho.evaluate(u) * fox_derivative(v, j, rho));
  }
}

TEST_CASE("complex examples") {
  const CochainComplexSurface triv = build_complex(LatticeLocalSystem::trivial(1, 1));
  CHECK(triv.d0 == IntMatrix(2, 1));
  CHECK(triv.d1 == IntMatrix(1, 2));
  const CochainComplexSurface sign = build_complex(sign_system());
  CHECK(sign.d0 == IntMatrix{{0}, {-2}});
  CHECK(sign.d1 == IntMatrix{{2, 0}});
}

TEST_CASE("local systems are validated") {
  CHECK_THROWS_AS(LatticeLocalSystem(1, 1, {IntMatrix{{2}}, IntMatrix{{1}}}), Error);
  CHECK_THROWS_AS(LatticeLocalSystem(1, 2, {IntMatrix::identity(2)}), Error);
  const LatticeLocalSystem bad(1, 2, {IntMatrix{{1, 1}, {0, 1}}, IntMatrix{{1, 0}, {1, 1}}});
  CHECK_FALSE(bad.satisfies_relation());
  try {
    build_complex(bad);
    FAIL("expected RelationViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RelationViolated);
  }
}

TEST_CASE("cohomology with constant coefficients") {
  for (std::size_t g = 0; g <= 3; ++g)
    for (std::size_t r = 1; r <= 3; ++r) {
      const TwistedCohomology h = twisted_cohomology(LatticeLocalSystem::trivial(g, r));
      CHECK(h.h0 == FgAbGroup(r, {}));
      CHECK(h.h1 == FgAbGroup(2 * g * r, {}));
      CHECK(h.h2 == FgAbGroup(r, {}));
    }
}

TEST_CASE("cohomology of the sign system") {
  const TwistedCohomology h = twisted_cohomology(sign_system());
  CHECK(h.h0.is_trivial());
  CHECK(h.h1 == FgAbGroup(0, {2}));
  CHECK(h.h2 == FgAbGroup(0, {2}));
  CHECK(euler(h) == 0);
  CHECK(invariants_coinvariants_check(sign_system()));
}

TEST_CASE("random systems satisfy the structural identities") {
  Rng rng(79);
  for (int t = 0; t < 60; ++t) {
    const std::size_t g = uniform(rng, 1, 3), r = uniform(rng, 1, 3);
    const LatticeLocalSystem rho = random_local_system(rng, g, r);
    const CochainComplexSurface cx = build_complex(rho);
    CHECK((cx.d1 * cx.d0).is_zero());
    const TwistedCohomology h = twisted_cohomology(rho);
    CHECK(euler(h) == (2 - 2 * static_cast<long>(g)) * static_cast<long>(r));
    CHECK(invariants_coinvariants_check(rho));
    // Free ranks agree with rational ranks of the differentials.
    const std::size_t rk0 = oracle::rational_rank(cx.d0), rk1 = oracle::rational_rank(cx.d1);
    CHECK(h.h0.free_rank() == r - rk0);
    CHECK(h.h1.free_rank() == 2 * g * r - rk1 - rk0);
    CHECK(h.h2.free_rank() == r - rk1);
  }
}

TEST_CASE("conjugation does not change cohomology") {
  Rng rng(83);
  for (int t = 0; t < 30; ++t) {
    const std::size_t g = uniform(rng, 1, 2), r = uniform(rng, 1, 3);
    const LatticeLocalSystem rho = random_local_system(rng, g, r);
    const LatticeLocalSystem conj = rho.conjugate(random_unimodular(rng, r));
    const TwistedCohomology a = twisted_cohomology(rho), b = twisted_cohomology(conj);
    CHECK(a.h0 == b.h0);
    CHECK(a.h1 == b.h1);
    CHECK(a.h2 == b.h2);
  }
}

TEST_CASE("dual system has the same torsion order in degree one") {
  Rng rng(89);
  for (int t = 0; t < 30; ++t) {
    const LatticeLocalSystem rho = random_local_system(rng, uniform(rng, 1, 2), uniform(rng, 1, 3));
    CHECK(twisted_cohomology(rho).h1.torsion_order() == twisted_cohomology(rho.dual()).h1.torsion_order());
  }
  CHECK(twisted_cohomology(sign_system().dual()).h1 == FgAbGroup(0, {2}));
}

TEST_CASE("monodromy families") {
  for (MonodromyFamily fam : {MonodromyFamily::Trivial, MonodromyFamily::Sign, MonodromyFamily::Unipotent})
    for (std::size_t g = 1; g <= 2; ++g)
      for (std::size_t r = 1; r <= 2; ++r) CHECK(family_system(fam, g, r).satisfies_relation());
  const TwistedCohomology uni = twisted_cohomology(family_system(MonodromyFamily::Unipotent, 1, 2));
  CHECK(uni.h0 == FgAbGroup(1, {}));
  CHECK(uni.h2 == FgAbGroup(1, {}));
  CHECK(uni.h1 == FgAbGroup(2, {}));
}

TEST_CASE("crossed homomorphism values") {
  const LatticeLocalSystem rho = sign_system();
  // f(a) = 0, f(b) = 1
  const IntVector f = make_vector({0, 1});
  CHECK(crossed_hom_value(Word{Letter{1, 1}}, f, rho) == make_vector({1}));
  CHECK(crossed_hom_value(Word{Letter{1, 1}, Letter{1, 1}}, f, rho) == make_vector({0}));
  CHECK(crossed_hom_value(Word{Letter{1, -1}}, f, rho) == make_vector({1}));
  CHECK_THROWS_AS(crossed_hom_value(Word{}, make_vector({1}), rho), Error);
}

}  // TEST_SUITE
