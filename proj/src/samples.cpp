#include "qtorus/samples.hpp"

#include <algorithm>

namespace qtorus {

std::string_view to_string(MonodromyFamily family) {
  switch (family) {
    case MonodromyFamily::Trivial: return "trivial";
    case MonodromyFamily::Sign: return "sign";
    case MonodromyFamily::Unipotent: return "unipotent";
  }
  return "unknown";
}

LatticeLocalSystem family_system(MonodromyFamily family, std::size_t genus, std::size_t rank) {
  std::vector<IntMatrix> mats(2 * genus, IntMatrix::identity(rank));
  if (genus == 0 || family == MonodromyFamily::Trivial) return LatticeLocalSystem(genus, rank, std::move(mats));
  if (family == MonodromyFamily::Sign) {
    mats[1] = -IntMatrix::identity(rank);
  } else if (rank == 1) {
    mats[0] = -IntMatrix::identity(1);
    mats[1] = -IntMatrix::identity(1);
  } else {
    mats[0](0, 1) = 1;
  }
  return LatticeLocalSystem(genus, rank, std::move(mats));
}

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps) {
  IntMatrix m = IntMatrix::identity(n);
  if (n == 0) return m;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    const auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    switch (uniform(rng, 0, 2)) {
      case 0:
        if (i != j) m.add_row_multiple(i, j, uniform(rng, -2, 2));
        break;
      case 1: m.swap_rows(i, j); break;
      default: m.negate_row(i); break;
    }
  }
  return m;
}

namespace {

IntMatrix power(const IntMatrix& a, long k) {
  IntMatrix base = k < 0 ? unimodular_inverse(a) : a;
  IntMatrix out = IntMatrix::identity(a.rows());
  for (long i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

}  // namespace

LatticeLocalSystem random_local_system(Rng& rng, std::size_t genus, std::size_t rank) {
  std::vector<IntMatrix> mats(2 * genus, IntMatrix::identity(rank));
  const IntMatrix minus = -IntMatrix::identity(rank);
  std::size_t i = 0;
  while (i < genus) {
    const long pattern = uniform(rng, 0, i + 1 < genus ? 4 : 3);
    const IntMatrix a = random_unimodular(rng, rank, 3);
    switch (pattern) {
      case 0:  // both trivial
        break;
      case 1:  // B = ±A^k
        mats[2 * i] = a;
        mats[2 * i + 1] = power(a, uniform(rng, -2, 2));
        if (uniform(rng, 0, 1)) mats[2 * i + 1] = minus * mats[2 * i + 1];
        break;
      case 2:  // A = ±1, B arbitrary
        mats[2 * i] = uniform(rng, 0, 1) ? minus : IntMatrix::identity(rank);
        mats[2 * i + 1] = a;
        break;
      case 3:  // A arbitrary, B = ±1
        mats[2 * i] = a;
        mats[2 * i + 1] = uniform(rng, 0, 1) ? minus : IntMatrix::identity(rank);
        break;
      default: {  // [A,B][B,A] = 1 across two handles
        const IntMatrix b = random_unimodular(rng, rank, 3);
        mats[2 * i] = a;
        mats[2 * i + 1] = b;
        mats[2 * i + 2] = b;
        mats[2 * i + 3] = a;
        ++i;
        break;
      }
    }
    ++i;
  }
  LatticeLocalSystem rho(genus, rank, std::move(mats));
  return rho.conjugate(random_unimodular(rng, rank, 4));
}

Frac1 random_frac(Rng& rng, long max_den) {
  const long den = uniform(rng, 1, max_den);
  return Frac1(uniform(rng, 0, den - 1), den);
}

QuadraticForm random_form(Rng& rng, std::size_t rank, long max_den) {
  QuadraticForm q(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    q.set_diag(i, random_frac(rng, max_den));
    for (std::size_t j = i + 1; j < rank; ++j) q.set_pair(i, j, random_frac(rng, max_den));
  }
  return q;
}

QuadraticForm random_invariant_form(Rng& rng, const LatticeLocalSystem& rho, long max_den, int attempts) {
  for (int k = 0; k < attempts; ++k) {
    QuadraticForm q = random_form(rng, rho.rank(), max_den);
    if (invariance_check(q, rho.monodromy())) return q;
  }
  return QuadraticForm(rho.rank());
}

}  // namespace qtorus
