#include "qtorus/global.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>

#include "qtorus/error.hpp"

namespace qtorus {

SectionSpaceInvariants section_space(const LatticeLocalSystem& rho) {
  const TwistedCohomology h = twisted_cohomology(rho);
  return {h.h2, h.h1, h.h0};
}

QuadraticForm level_form(const LevelInput& input) {
  if (input.bilinear.c.rows() != input.rho.rank() || input.bilinear.c.cols() != input.rho.rank())
    throw Error(ErrorCode::DimensionMismatch, "level matrix size differs from the lattice rank");
  QuadraticForm q = quad_from_bilinear(input.bilinear);
  if (!invariance_check(q, input.rho.monodromy()))
    throw Error(ErrorCode::NotInvariant, "the level is not invariant under the monodromy");
  return q;
}

Frac1 cup_closed_form(const IntVector& f, const IntVector& h, const SymmetricForm& b, const LatticeLocalSystem& rho) {
  const std::size_t r = rho.rank();
  const Word relator = SurfaceGroup(rho.genus()).relator();
  Frac1 total;
  Word prefix;
  for (const Letter& y : relator) {
    const IntVector f_prefix = crossed_hom_value(prefix, f, rho);
    if (!is_zero(f_prefix))
      total += b(f_prefix, rho.evaluate(prefix) * crossed_hom_value(Word{y}, h, rho));
    prefix.push_back(y);
  }
  // The cycle sum_k [w_k | y_k] is corrected by -sum_j [x_j | x_j^-1].
  for (std::size_t j = 0; j < 2 * rho.genus(); ++j) {
    IntVector fj(f.begin() + j * r, f.begin() + (j + 1) * r), hj(h.begin() + j * r, h.begin() + (j + 1) * r);
    total += b(fj, hj);
  }
  return Integer(orientation_sign) * total;
}

namespace {

FracMatrix pairing_table(const IntMatrix& gens, const std::function<Frac1(const IntVector&, const IntVector&)>& cup) {
  const std::size_t n = gens.cols();
  FracMatrix omega(n, std::vector<Frac1>(n));
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(gens.column(j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) omega[i][j] = cup(cols[i], cols[j]);
  return omega;
}

}  // namespace

FracMatrix commutator_pairing(const QuadraticForm& q, const LatticeLocalSystem& rho) {
  const SymmetricForm b = polarize(q);
  const TwistedCohomology h = twisted_cohomology(rho);
  return pairing_table(h.h1_gens.generators,
                       [&](const IntVector& x, const IntVector& y) { return cup_closed_form(x, y, b, rho); });
}

FracMatrix commutator_pairing(const LevelInput& input) { return commutator_pairing(level_form(input), input.rho); }

FracMatrix commutator_pairing_oracle(const QuadraticForm& q, const LatticeLocalSystem& rho) {
  const SymmetricForm b = polarize(q);
  const TwistedCohomology h = twisted_cohomology(rho);
  if (h.h1.generator_count() == 0) return {};
  const TriangulatedSurface t = triangulate(rho.genus());
  std::vector<TwistedCochain> lifts;
  for (std::size_t j = 0; j < h.h1_gens.generators.cols(); ++j)
    lifts.push_back(class_of(h.h1_gens.generators.column(j), t, rho));
  const std::size_t n = lifts.size();
  FracMatrix omega(n, std::vector<Frac1>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) omega[i][j] = cup_evaluate(lifts[i], lifts[j], b, t, rho);
  return omega;
}

std::vector<Frac1> pi2_character(const LevelInput& input, const IntVector& d_rep) {
  const std::size_t r = input.rho.rank();
  if (d_rep.size() != r)
    throw Error(ErrorCode::BadComponent, "component representative must have length " + std::to_string(r));
  const SymmetricForm b = polarize(level_form(input));
  const IntMatrix invariants = twisted_cohomology(input.rho).h0_basis;

  auto character = [&](const IntVector& d) {
    std::vector<Frac1> chi;
    for (std::size_t k = 0; k < invariants.cols(); ++k) chi.push_back(b(invariants.column(k), d));
    return chi;
  };
  const std::vector<Frac1> chi = character(d_rep);
  // Shifting d by (ρ(x_j) - 1) e_i stays in the same coinvariant class.
  for (const IntMatrix& m : input.rho.monodromy()) {
    const IntMatrix delta = m - IntMatrix::identity(r);
    for (std::size_t i = 0; i < r; ++i)
      if (character(d_rep + delta.column(i)) != chi)
        throw Error(ErrorCode::OracleDisagreement, "pi2 character depends on the component representative");
  }
  return chi;
}

BlockShape block_shape(const FracMatrix& omega, std::size_t free_rank) {
  BlockShape shape;
  if (free_rank == 0) return shape;
  Integer n = 1;
  for (std::size_t i = 0; i < free_rank; ++i)
    for (std::size_t j = 0; j < free_rank; ++j) mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), omega[i][j].den().get_mpz_t());
  IntMatrix lift(free_rank, free_rank);
  for (std::size_t i = 0; i < free_rank; ++i)
    for (std::size_t j = 0; j < free_rank; ++j) lift(i, j) = omega[i][j].num() * (n / omega[i][j].den());
  const std::vector<Integer> d = smith_normal_form(lift).diagonal();
  for (std::size_t i = 0; i < free_rank; ++i) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d[i].get_mpz_t());  // gcd(n, 0) = n
    const Integer factor = n / g;
    shape.quotient_order *= factor;
    if (factor == 1) ++shape.radical_rank;
  }
  Integer root;
  mpz_sqrt(root.get_mpz_t(), shape.quotient_order.get_mpz_t());
  if (root * root != shape.quotient_order)
    throw Error(ErrorCode::OracleDisagreement,
                "quotient of pi1 by the radical has non-square order " + shape.quotient_order.get_str());
  shape.block_dim = root;
  return shape;
}

IntVector h2_coordinates(const LatticeLocalSystem& rho, const IntVector& d_rep) {
  if (d_rep.size() != rho.rank())
    throw Error(ErrorCode::BadComponent, "component representative must have length " + std::to_string(rho.rank()));
  const SnfResult s = smith_normal_form(build_complex(rho).d1);
  const IntVector y = s.U * d_rep;
  const std::size_t rk = s.rank();
  IntVector coords;
  for (std::size_t i = rk; i < y.size(); ++i) coords.push_back(y[i]);
  for (std::size_t i = 0; i < rk; ++i) {
    if (s.D(i, i) == 1) continue;
    Integer c;
    mpz_fdiv_r(c.get_mpz_t(), y[i].get_mpz_t(), s.D(i, i).get_mpz_t());
    coords.push_back(c);
  }
  return coords;
}

std::vector<IntVector> enumerate_components(const LatticeLocalSystem& rho, const ComponentRequest& request) {
  const std::size_t r = rho.rank();
  if (!request.explicit_reps.empty()) {
    for (const IntVector& d : request.explicit_reps)
      if (d.size() != r)
        throw Error(ErrorCode::BadComponent, "component representative must have length " + std::to_string(r));
    return request.explicit_reps;
  }
  const GroupPresentation h2 = twisted_cohomology(rho).h2_gens;
  const std::size_t free = h2.group.free_rank();
  if (free > 0 && !request.bound)
    throw Error(ErrorCode::BadSpec, "H^2 is infinite: give explicit components or a component bound");
  const long bound = request.bound.value_or(0);
  if (bound < 0) throw Error(ErrorCode::BadSpec, "component bound must be nonnegative");

  std::vector<Integer> lo, span;
  for (std::size_t i = 0; i < free; ++i) {
    lo.emplace_back(-bound);
    span.emplace_back(2 * bound + 1);
  }
  for (const Integer& d : h2.group.torsion()) {
    lo.emplace_back(0);
    span.push_back(d);
  }
  const Integer total = std::accumulate(span.begin(), span.end(), Integer(1), std::multiplies<>());
  if (total > max_components)
    throw Error(ErrorCode::TooManyComponents, "requested " + total.get_str() + " components, limit is " +
                                                  std::to_string(max_components));

  std::vector<IntVector> reps;
  std::vector<Integer> digit(span.size(), 0);
  for (;;) {
    IntVector rep(r);
    for (std::size_t i = 0; i < span.size(); ++i) rep = rep + Integer(lo[i] + digit[i]) * h2.generators.column(i);
    reps.push_back(std::move(rep));
    std::size_t pos = span.size();
    while (pos > 0) {
      --pos;
      if (++digit[pos] < span[pos]) break;
      digit[pos] = 0;
      if (pos == 0) return reps;
    }
    if (span.empty()) return reps;
  }
}

std::vector<GerbeBlock> block_report(const LevelInput& input, const ComponentRequest& request, unsigned threads) {
  const QuadraticForm q = level_form(input);
  const FracMatrix omega = commutator_pairing(q, input.rho);
  const BlockShape shape = block_shape(omega, section_space(input.rho).pi1.free_rank());
  const std::vector<IntVector> reps = enumerate_components(input.rho, request);

  std::vector<GerbeBlock> blocks(reps.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < reps.size(); i = next++) {
      GerbeBlock& blk = blocks[i];
      blk.component = reps[i];
      blk.omega = omega;
      blk.pi2_character = pi2_character(input, reps[i]);
      blk.radical_rank = shape.radical_rank;
      blk.block_dim = shape.block_dim;
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(reps.size())));
  if (n == 1) {
    work();
    return blocks;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned t = 0; t < n; ++t)
    pool.emplace_back([&] {
      try {
        work();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = reps.size();
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return blocks;
}

BuntReport bunt_report(const LevelInput& input, const ComponentRequest& request, unsigned threads) {
  const SectionSpaceInvariants s = section_space(input.rho);
  BuntReport report{s.pi0, s.pi1, s.pi2, {}, block_report(input, request, threads)};
  for (const GerbeBlock& blk : report.blocks) report.chern_classes.push_back(h2_coordinates(input.rho, blk.component));
  return report;
}

}  // namespace qtorus
