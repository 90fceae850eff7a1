#include <functional>

#include "doctest.h"
#include "oracles.hpp"
#include "qtorus/error.hpp"
#include "qtorus/global.hpp"
#include "qtorus/samples.hpp"

using namespace qtorus;

namespace {

Frac1 f(long n, long d) { return Frac1(n, d); }

// b(m, n) = mn / N in rank one.
LevelInput rank_one_level(std::size_t genus, long n) {
  return {BilinearData{IntMatrix{{1}}, Frac1(1, 2 * n)}, LatticeLocalSystem::trivial(genus, 1)};
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::OracleDisagreement;
}

}  // namespace

TEST_SUITE("global") {

TEST_CASE("section space examples") {
  const SectionSpaceInvariants t1 = section_space(LatticeLocalSystem::trivial(1, 1));
  CHECK(t1.pi0 == FgAbGroup(1, {}));
  CHECK(t1.pi1 == FgAbGroup(2, {}));
  CHECK(t1.pi2 == FgAbGroup(1, {}));
  const SectionSpaceInvariants t2 = section_space(LatticeLocalSystem::trivial(2, 2));
  CHECK(t2.pi0 == FgAbGroup(2, {}));
  CHECK(t2.pi1 == FgAbGroup(8, {}));
  CHECK(t2.pi2 == FgAbGroup(2, {}));
  const SectionSpaceInvariants s = section_space(family_system(MonodromyFamily::Sign, 1, 1));
  CHECK(s.pi0 == FgAbGroup(0, {2}));
  CHECK(s.pi1 == FgAbGroup(0, {2}));
  CHECK(s.pi2.is_trivial());
}

TEST_CASE("pairing of the trivial level vanishes") {
  for (std::size_t g = 1; g <= 2; ++g) {
    const LevelInput in{BilinearData{IntMatrix{{0}}, Frac1()}, LatticeLocalSystem::trivial(g, 1)};
    for (const auto& row : commutator_pairing(in))
      for (const Frac1& v : row) CHECK(v.is_zero());
  }
}

TEST_CASE("rank one torus pairing is the scaled intersection form") {
  for (long n = 1; n <= 12; ++n) {
    const FracMatrix omega = commutator_pairing(rank_one_level(1, n));
    REQUIRE(omega.size() == 2);
    CHECK(omega[0][0].is_zero());
    CHECK(omega[0][1] == f(orientation_sign, n));
    CHECK(omega[1][0] == f(-orientation_sign, n));
    CHECK(omega[1][1].is_zero());
  }
}

TEST_CASE("genus two pairing is two copies of the genus one pairing") {
  const FracMatrix omega = commutator_pairing(rank_one_level(2, 5));
  REQUIRE(omega.size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      long expected = 0;
      if (i / 2 == j / 2 && i != j) expected = i % 2 == 0 ? 1 : -1;
      CHECK(omega[i][j] == f(expected, 5));
    }
}

TEST_CASE("closed form agrees with the cochain oracle") {
  Rng rng(103);
  int configs = 0;
  for (MonodromyFamily fam : {MonodromyFamily::Trivial, MonodromyFamily::Sign, MonodromyFamily::Unipotent})
    for (std::size_t g = 1; g <= 2; ++g)
      for (std::size_t r = 1; r <= 2; ++r) {
        const LatticeLocalSystem rho = family_system(fam, g, r);
        for (int t = 0; t < 6; ++t, ++configs) {
          const QuadraticForm q = random_invariant_form(rng, rho, 6);
          CHECK(commutator_pairing(q, rho) == commutator_pairing_oracle(q, rho));
        }
      }
  for (int t = 0; t < 20; ++t, ++configs) {
    const LatticeLocalSystem rho = random_local_system(rng, uniform(rng, 1, 2), uniform(rng, 1, 2));
    const QuadraticForm q = random_invariant_form(rng, rho, 6);
    CHECK(commutator_pairing(q, rho) == commutator_pairing_oracle(q, rho));
  }
  CHECK(configs >= 92);
}

TEST_CASE("pairing is antisymmetric with zero diagonal on free generators") {
  Rng rng(107);
  for (int t = 0; t < 40; ++t) {
    const LatticeLocalSystem rho = random_local_system(rng, uniform(rng, 1, 2), uniform(rng, 1, 2));
    const QuadraticForm q = random_invariant_form(rng, rho, 12);
    const FracMatrix omega = commutator_pairing(q, rho);
    const std::size_t free = section_space(rho).pi1.free_rank();
    for (std::size_t i = 0; i < omega.size(); ++i) {
      if (i < free) CHECK(omega[i][i].is_zero());
      for (std::size_t j = 0; j < omega.size(); ++j) CHECK(omega[i][j] == -omega[j][i]);
    }
  }
}

TEST_CASE("pairing is additive in the level") {
  Rng rng(109);
  for (int t = 0; t < 30; ++t) {
    const LatticeLocalSystem rho = random_local_system(rng, uniform(rng, 1, 2), uniform(rng, 1, 2));
    const QuadraticForm q1 = random_invariant_form(rng, rho, 6), q2 = random_invariant_form(rng, rho, 6);
    const FracMatrix a = commutator_pairing(q1, rho), b = commutator_pairing(q2, rho),
                     s = commutator_pairing(q1 + q2, rho);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j) CHECK(s[i][j] == a[i][j] + b[i][j]);
  }
}

TEST_CASE("non-invariant levels are rejected") {
  const LatticeLocalSystem swap(1, 2, {IntMatrix{{0, 1}, {1, 0}}, IntMatrix::identity(2)});
  const LevelInput in{BilinearData{IntMatrix{{1, 0}, {0, 0}}, f(1, 3)}, swap};
  CHECK(code_of([&] { level_form(in); }) == ErrorCode::NotInvariant);
  const LevelInput wrong{BilinearData{IntMatrix{{1}}, f(1, 3)}, swap};
  CHECK(code_of([&] { level_form(wrong); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("block dimensions match brute-force enumeration") {
  for (std::size_t g = 1; g <= 2; ++g)
    for (long n = 1; n <= 12; ++n) {
      const LevelInput in = rank_one_level(g, n);
      const FracMatrix omega = commutator_pairing(in);
      std::vector<std::vector<long>> a(omega.size(), std::vector<long>(omega.size()));
      for (std::size_t i = 0; i < omega.size(); ++i)
        for (std::size_t j = 0; j < omega.size(); ++j)
          a[i][j] = Integer(omega[i][j].num() * (n / omega[i][j].den())).get_si();
      const long order = oracle::brute_quotient_order(a, n);
      const BlockShape shape = block_shape(omega, omega.size());
      CHECK(shape.quotient_order == order);
      CHECK(shape.block_dim == oracle::integer_sqrt(order));
      CHECK(shape.block_dim == (g == 1 ? n : n * n));
      CHECK(shape.radical_rank == (n == 1 ? 2 * g : 0));
    }
}

TEST_CASE("block shape of a degenerate pairing") {
  // omega = 1/4 on the first hyperbolic pair, zero on the second.
  FracMatrix omega(4, std::vector<Frac1>(4));
  omega[0][1] = f(1, 4);
  omega[1][0] = f(3, 4);
  const BlockShape s = block_shape(omega, 4);
  CHECK(s.radical_rank == 2);
  CHECK(s.block_dim == 4);
  CHECK(block_shape(FracMatrix{}, 0).block_dim == 1);
  CHECK(code_of([] { block_shape(FracMatrix{{f(1, 2)}}, 1); }) == ErrorCode::OracleDisagreement);
}

TEST_CASE("pi2 character examples") {
  for (long n = 2; n <= 6; ++n) {
    const LevelInput in = rank_one_level(1, n);
    CHECK(pi2_character(in, make_vector({0})) == std::vector<Frac1>{Frac1()});
    CHECK(pi2_character(in, make_vector({1})) == std::vector<Frac1>{f(1, n)});
  }
  const LevelInput sign{BilinearData{IntMatrix{{1}}, f(1, 3)}, family_system(MonodromyFamily::Sign, 1, 1)};
  CHECK(pi2_character(sign, make_vector({1})).empty());
  CHECK(code_of([&] { pi2_character(sign, make_vector({1, 0})); }) == ErrorCode::BadComponent);
}

TEST_CASE("pi2 character does not depend on the representative") {
  Rng rng(113);
  for (int t = 0; t < 20; ++t) {
    const std::size_t r = uniform(rng, 1, 2);
    const LatticeLocalSystem rho = random_local_system(rng, uniform(rng, 1, 2), r);
    const QuadraticForm q = random_invariant_form(rng, rho, 6);
    const LevelInput in{bilinear_lift(q), rho};
    const IntVector d = random_matrix(rng, r, 1, -3, 3).column(0);
    const std::vector<Frac1> chi = pi2_character(in, d);
    for (int k = 0; k < 10; ++k) {
      IntVector shift(r);
      for (const IntMatrix& m : rho.monodromy())
        shift = shift + (m - IntMatrix::identity(r)) * random_matrix(rng, r, 1, -2, 2).column(0);
      CHECK(pi2_character(in, d + shift) == chi);
    }
  }
}

TEST_CASE("component enumeration") {
  const LatticeLocalSystem triv = LatticeLocalSystem::trivial(1, 1);
  CHECK(code_of([&] { enumerate_components(triv, {}); }) == ErrorCode::BadSpec);
  ComponentRequest bounded;
  bounded.bound = 2;
  CHECK(enumerate_components(triv, bounded).size() == 5);
  ComponentRequest huge;
  huge.bound = 100000;
  CHECK(code_of([&] { enumerate_components(triv, huge); }) == ErrorCode::TooManyComponents);

  const LatticeLocalSystem sign = family_system(MonodromyFamily::Sign, 1, 1);
  CHECK(enumerate_components(sign, {}).size() == 2);
  CHECK(h2_coordinates(sign, make_vector({3})) == h2_coordinates(sign, make_vector({1})));
  CHECK(h2_coordinates(sign, make_vector({2})) == h2_coordinates(sign, make_vector({0})));
}

TEST_CASE("block report is independent of the thread count") {
  const LevelInput in = rank_one_level(1, 4);
  ComponentRequest req;
  req.bound = 6;
  const auto serial = block_report(in, req, 1);
  CHECK(serial.size() == 13);
  CHECK(block_report(in, req, 4) == serial);
  for (const GerbeBlock& blk : serial) {
    CHECK(blk.block_dim == 4);
    CHECK(blk.radical_rank == 0);
  }
}

TEST_CASE("trivial level gives trivial blocks") {
  Rng rng(127);
  for (int t = 0; t < 10; ++t) {
    const LatticeLocalSystem rho = random_local_system(rng, uniform(rng, 1, 2), uniform(rng, 1, 2));
    const std::size_t r = rho.rank();
    ComponentRequest req;
    req.explicit_reps.push_back(IntVector(r));
    const auto blocks = block_report({BilinearData{IntMatrix(r, r), Frac1()}, rho}, req);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].block_dim == 1);
    CHECK(blocks[0].radical_rank == section_space(rho).pi1.free_rank());
  }
}

TEST_CASE("Bun_T report matches the section space") {
  Rng rng(131);
  for (int t = 0; t < 20; ++t) {
    const LatticeLocalSystem rho = random_local_system(rng, uniform(rng, 1, 2), uniform(rng, 1, 2));
    const LevelInput in{bilinear_lift(random_invariant_form(rng, rho, 6)), rho};
    ComponentRequest req;
    req.bound = 1;
    const BuntReport br = bunt_report(in, req);
    CHECK(br.as_section_space() == section_space(rho));
    CHECK(br.blocks == block_report(in, req));
    CHECK(br.chern_classes.size() == br.blocks.size());
  }
  const BuntReport sign = bunt_report(
      {BilinearData{IntMatrix{{0}}, Frac1()}, family_system(MonodromyFamily::Sign, 1, 1)}, ComponentRequest{});
  CHECK(sign.pi0_bun_t == FgAbGroup(0, {2}));
  ComponentRequest one;
  one.explicit_reps.push_back(make_vector({0}));
  CHECK(bunt_report(rank_one_level(1, 3), one).pi0_bun_t == FgAbGroup(1, {}));
}

TEST_CASE("block shapes are perfect squares on every monodromy family") {
  Rng rng(137);
  for (MonodromyFamily fam : {MonodromyFamily::Trivial, MonodromyFamily::Sign, MonodromyFamily::Unipotent})
    for (std::size_t g = 1; g <= 2; ++g)
      for (std::size_t r = 1; r <= 2; ++r) {
        const LatticeLocalSystem rho = family_system(fam, g, r);
        ComponentRequest req;
        req.bound = 1;
        for (int t = 0; t < 10; ++t) {
          const LevelInput in{bilinear_lift(random_invariant_form(rng, rho, 12)), rho};
          CHECK_NOTHROW(block_report(in, req));
        }
      }
  for (int t = 0; t < 40; ++t) {
    const LatticeLocalSystem rho = random_local_system(rng, uniform(rng, 1, 2), uniform(rng, 1, 3));
    ComponentRequest req;
    req.explicit_reps.push_back(IntVector(rho.rank()));
    const LevelInput in{bilinear_lift(random_invariant_form(rng, rho, 12)), rho};
    CHECK_NOTHROW(block_report(in, req));
  }
}

}  // TEST_SUITE
