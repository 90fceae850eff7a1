#pragma once

// Seeded generators for local systems, levels and matrices, shared by the
// self-check command and the test suites.

#include <cstddef>
#include <random>
#include <string_view>

#include "qtorus/forms.hpp"
#include "qtorus/surface.hpp"

namespace qtorus {

using Rng = std::mt19937_64;

enum class MonodromyFamily {
  Trivial,
  // ρ(b_1) = -1, everything else trivial.
  Sign,
  // Rank >= 2: ρ(a_1) = [[1,1],[0,1]] ⊕ 1. GL_1(Z) has no nontrivial
  // unipotents, so in rank 1 this is ρ(a_1) = ρ(b_1) = -1 instead.
  Unipotent,
};

std::string_view to_string(MonodromyFamily family);
LatticeLocalSystem family_system(MonodromyFamily family, std::size_t genus, std::size_t rank);

long uniform(Rng& rng, long lo, long hi);
IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi);
/// Product of random elementary matrices and signed permutations.
IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps = 6);
/// A valid local system: each handle gets a commuting pair, or (for g >= 2)
/// handle pairs whose commutators cancel, then everything is conjugated by
/// a random unimodular matrix.
LatticeLocalSystem random_local_system(Rng& rng, std::size_t genus, std::size_t rank);

Frac1 random_frac(Rng& rng, long max_den);
QuadraticForm random_form(Rng& rng, std::size_t rank, long max_den);
/// Rejection-samples a ρ-invariant form; falls back to the zero form.
QuadraticForm random_invariant_form(Rng& rng, const LatticeLocalSystem& rho, long max_den, int attempts = 200);

}  // namespace qtorus
