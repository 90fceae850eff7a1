#pragma once

// Surface groups, lattice local systems on closed oriented surfaces and
// their twisted cohomology, computed from the one-relator presentation
//   pi_1(Sigma_g) = < a_1, b_1, ..., a_g, b_g | prod_i a_i b_i a_i^-1 b_i^-1 >
// with Fox calculus. Generator j is a_{j/2+1} for even j and b_{j/2+1} for odd j.

#include <cstddef>
#include <string>
#include <vector>

#include "qtorus/lattice.hpp"

namespace qtorus {

struct Letter {
  std::size_t generator;
  int exponent;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

class SurfaceGroup {
 public:
  explicit SurfaceGroup(std::size_t genus);

  std::size_t genus() const noexcept { return genus_; }
  std::size_t generator_count() const noexcept { return 2 * genus_; }
  const Word& relator() const noexcept { return relator_; }
  static std::string generator_name(std::size_t j);

 private:
  std::size_t genus_;
  Word relator_;
};

/// Monodromy representation pi_1(Sigma_g) -> GL_r(Z), one matrix per generator.
class LatticeLocalSystem {
 public:
  /// Checks shapes and unimodularity (NonUnimodular). The surface relation
  /// is checked separately by validate().
  LatticeLocalSystem(std::size_t genus, std::size_t rank, std::vector<IntMatrix> monodromy);

  static LatticeLocalSystem trivial(std::size_t genus, std::size_t rank);

  std::size_t genus() const noexcept { return genus_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<IntMatrix>& monodromy() const noexcept { return mon_; }
  const IntMatrix& matrix(std::size_t generator) const { return mon_.at(generator); }
  const IntMatrix& inverse(std::size_t generator) const { return inv_.at(generator); }

  /// rho(word); throws BadGeneratorIndex for letters outside the genus.
  IntMatrix evaluate(const Word& word) const;
  bool satisfies_relation() const;
  /// Throws RelationViolated unless prod_i [A_i, B_i] = I.
  void validate() const;

  /// P rho P^-1 for unimodular P.
  LatticeLocalSystem conjugate(const IntMatrix& p) const;
  /// The contragredient system x -> rho(x)^-T.
  LatticeLocalSystem dual() const;

 private:
  std::size_t genus_;
  std::size_t rank_;
  std::vector<IntMatrix> mon_;
  std::vector<IntMatrix> inv_;
};

/// C^0 = Λ --d0--> C^1 = Λ^{2g} --d1--> C^2 = Λ.
struct CochainComplexSurface {
  IntMatrix d0;  // 2g·r × r
  IntMatrix d1;  // r × 2g·r
};

struct TwistedCohomology {
  FgAbGroup h0;
  FgAbGroup h1;
  FgAbGroup h2;
  IntMatrix h0_basis;          // columns: Z-basis of the invariants Λ^ρ
  GroupPresentation h1_gens;   // generators as cocycles in C^1
  GroupPresentation h2_gens;   // generators as vectors of Λ
};

/// Fox derivative of `word` with respect to generator gen_index, pushed
/// through rho.
IntMatrix fox_derivative(const Word& word, std::size_t gen_index, const LatticeLocalSystem& rho);

/// f(word) for the crossed homomorphism f with f(x_j) = block j of cochain.
IntVector crossed_hom_value(const Word& word, const IntVector& cochain, const LatticeLocalSystem& rho);

CochainComplexSurface build_complex(const LatticeLocalSystem& rho);
TwistedCohomology twisted_cohomology(const LatticeLocalSystem& rho);
/// Compares H0 and H2 with the invariants and coinvariants of the monodromy,
/// computed without Fox calculus.
bool invariants_coinvariants_check(const LatticeLocalSystem& rho);

}  // namespace qtorus
