#pragma once

// Global invariants of the quantum torus on a closed surface: the homotopy
// groups of the section space Γ_c(Σ, B²Λ) (π_n = H^{2-n}(Σ, Λ_ρ)), the
// commutator pairing ω of the level gerbe on π_1, the π_2-character of
// each component, and the resulting block dimensions.

#include <cstddef>
#include <optional>
#include <vector>

#include "qtorus/cochain.hpp"
#include "qtorus/forms.hpp"
#include "qtorus/surface.hpp"

namespace qtorus {

struct SectionSpaceInvariants {
  FgAbGroup pi0;  // H^2
  FgAbGroup pi1;  // H^1
  FgAbGroup pi2;  // H^0

  friend bool operator==(const SectionSpaceInvariants&, const SectionSpaceInvariants&) = default;
};

struct LevelInput {
  BilinearData bilinear;
  LatticeLocalSystem rho;
};

struct GerbeBlock {
  IntVector component;                // representative in Λ of a class in H^2
  FracMatrix omega;                   // on H^1 generators, free ones first
  std::vector<Frac1> pi2_character;   // on the free generators of H^0
  std::size_t radical_rank = 0;
  Integer block_dim = 1;

  friend bool operator==(const GerbeBlock&, const GerbeBlock&) = default;
};

/// Square-class count of ω restricted to the free part of H^1.
struct BlockShape {
  std::size_t radical_rank = 0;
  Integer quotient_order = 1;
  Integer block_dim = 1;
};

/// Which components to report: explicit representatives, or every torsion
/// class combined with free coordinates in [-bound, bound].
struct ComponentRequest {
  std::vector<IntVector> explicit_reps;
  std::optional<long> bound;
};

inline constexpr std::size_t max_components = 10000;

SectionSpaceInvariants section_space(const LatticeLocalSystem& rho);

/// Q from the bilinear data; throws NotInvariant if Q is not preserved by ρ.
QuadraticForm level_form(const LevelInput& input);

/// <f ∪ h, [Σ]> paired through b, from the bar-resolution fundamental class
/// of the one-relator presentation:
///   Σ_k b(f(w_k), ρ(w_k) h(y_k)) + Σ_j b(f(x_j), h(x_j)),
/// where R = y_1 ... y_{4g} and w_k = y_1 ... y_k.
Frac1 cup_closed_form(const IntVector& f, const IntVector& h, const SymmetricForm& b, const LatticeLocalSystem& rho);

/// ω on the canonical generators of H^1 (closed form).
FracMatrix commutator_pairing(const LevelInput& input);
FracMatrix commutator_pairing(const QuadraticForm& q, const LatticeLocalSystem& rho);
/// ω recomputed by simplicial cup products on the polygon triangulation.
FracMatrix commutator_pairing_oracle(const QuadraticForm& q, const LatticeLocalSystem& rho);

std::vector<Frac1> pi2_character(const LevelInput& input, const IntVector& d_rep);

BlockShape block_shape(const FracMatrix& omega, std::size_t free_rank);

/// Coordinates of the class of d_rep in the canonical generators of H^2.
IntVector h2_coordinates(const LatticeLocalSystem& rho, const IntVector& d_rep);
std::vector<IntVector> enumerate_components(const LatticeLocalSystem& rho, const ComponentRequest& request);

/// Per-component blocks; components are processed on up to `threads`
/// worker threads, results are returned in request order.
std::vector<GerbeBlock> block_report(const LevelInput& input, const ComponentRequest& request,
                                     unsigned threads = 1);

struct BuntReport {
  FgAbGroup pi0_bun_t;                       // components, labelled by first Chern class
  FgAbGroup pi1_bun_t0;                      // H^1
  FgAbGroup pi2_bun_t0;                      // H^0
  std::vector<IntVector> chern_classes;      // H^2 coordinates of each block's component
  std::vector<GerbeBlock> blocks;

  SectionSpaceInvariants as_section_space() const { return {pi0_bun_t, pi1_bun_t0, pi2_bun_t0}; }
};

BuntReport bunt_report(const LevelInput& input, const ComponentRequest& request, unsigned threads = 1);

}  // namespace qtorus
