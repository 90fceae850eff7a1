#pragma once

// Fiberwise data of the quantum torus category: lattice-graded objects
// with one-dimensional graded pieces, the braiding phases of a chosen
// bilinear refinement of the level, and the ribbon twist.

#include <functional>
#include <map>

#include "qtorus/forms.hpp"

namespace qtorus {

/// Finitely supported Z^rank-graded object; each grade carries a multiplicity.
class GradedObject {
 public:
  using Support = std::map<IntVector, Integer>;

  GradedObject() = default;
  explicit GradedObject(std::size_t rank) : rank_(rank) {}
  GradedObject(std::size_t rank, Support support);

  /// Multiplicity one at the origin.
  static GradedObject unit(std::size_t rank);

  std::size_t rank() const noexcept { return rank_; }
  const Support& support() const noexcept { return support_; }
  Integer multiplicity(const IntVector& lambda) const;

  /// Adds mult copies of grade lambda; mult must be positive.
  void add(const IntVector& lambda, const Integer& mult);

  friend bool operator==(const GradedObject&, const GradedObject&) = default;

 private:
  std::size_t rank_ = 0;
  Support support_;
};

/// A level together with a refinement beta of its symmetric form:
/// beta[i][i] = Q(e_i) and beta[i][j] + beta[j][i] = b(e_i, e_j).
class BraidedData {
 public:
  /// Throws InvalidRefinement if beta does not refine q.
  BraidedData(QuadraticForm q, FracMatrix beta);

  const QuadraticForm& form() const noexcept { return q_; }
  const FracMatrix& beta() const noexcept { return beta_; }
  std::size_t rank() const noexcept { return q_.rank(); }

 private:
  QuadraticForm q_;
  FracMatrix beta_;
};

/// Any braiding-phase function, so hexagon checks can be run against
/// phases that do not come from a BraidedData.
using PhaseFunction = std::function<Frac1(const IntVector&, const IntVector&)>;

/// Upper-triangular convention: beta[i][j] = b(e_i, e_j) for i < j, 0 below.
BraidedData standard_refinement(const QuadraticForm& q);
/// Shifts beta by phase * K for an antisymmetric integer matrix K.
BraidedData perturb_refinement(const BraidedData& b, const IntMatrix& antisymmetric, const Frac1& phase);

Frac1 braiding_phase(const BraidedData& b, const IntVector& lambda, const IntVector& mu);
Frac1 double_braiding(const BraidedData& b, const IntVector& lambda1, const IntVector& lambda2);
Frac1 twist(const BraidedData& b, const IntVector& lambda);
/// theta(l1 + l2) - theta(l1) - theta(l2) equals the double braiding.
bool balancing_check(const BraidedData& b, const IntVector& lambda1, const IntVector& lambda2);
/// With trivial associator the hexagon axioms reduce to bilinearity of the phases.
bool hexagon_check(const PhaseFunction& phase, const IntVector& lambda1, const IntVector& lambda2,
                   const IntVector& lambda3);
bool hexagon_check(const BraidedData& b, const IntVector& lambda1, const IntVector& lambda2,
                   const IntVector& lambda3);

GradedObject fuse(const GradedObject& v, const GradedObject& w);

}  // namespace qtorus
