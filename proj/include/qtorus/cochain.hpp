#pragma once

// Simplicial model of a closed oriented surface of genus g >= 1: the
// 4g-gon with boundary word prod a_i b_i a_i^-1 b_i^-1, coned off from an
// interior point. The result is a Delta-complex with two vertices (the
// polygon corner and the cone point), 2g boundary edges, 4g spokes and 4g
// triangles. Twisted cochains store their values on the lifts of simplices
// inside one fixed copy of the polygon in the universal cover; a face that
// sits on the polygon boundary is a translate of its stored lift by a deck
// transformation, recorded as a transport word.

#include <cstddef>
#include <vector>

#include "qtorus/forms.hpp"
#include "qtorus/surface.hpp"

namespace qtorus {

/// Face of a simplex: the stored lift of `simplex`, moved by `transport`.
struct FaceRef {
  std::size_t simplex;
  Word transport;
};

/// faces[i] is the face opposite vertex i (vertices in increasing order).
struct Cell {
  std::vector<FaceRef> faces;
};

class TriangulatedSurface {
 public:
  std::size_t genus() const noexcept { return genus_; }
  std::size_t count(int degree) const;
  const std::vector<Cell>& edges() const noexcept { return edges_; }
  const std::vector<Cell>& triangles() const noexcept { return triangles_; }
  /// Sign of each triangle in the fundamental cycle.
  const std::vector<int>& orientation() const noexcept { return orientation_; }

  std::size_t boundary_edge(std::size_t generator) const { return generator; }
  std::size_t spoke(std::size_t corner) const { return 2 * genus_ + corner % (4 * genus_); }
  /// Deck transformation carrying the base corner of the polygon to corner k.
  const Word& corner_transport(std::size_t k) const { return corner_words_.at(k); }

  int euler_characteristic() const;
  bool edges_have_two_cofaces() const;
  bool fundamental_cycle_closed() const;
  bool vertex_links_are_circles() const;

  static constexpr std::size_t corner_vertex = 0;
  static constexpr std::size_t cone_vertex = 1;

 private:
  friend TriangulatedSurface triangulate(std::size_t genus);

  std::size_t genus_ = 0;
  std::vector<Cell> edges_;
  std::vector<Cell> triangles_;
  std::vector<int> orientation_;
  std::vector<Word> corner_words_;
};

/// Throws UnsupportedGenus for g = 0.
TriangulatedSurface triangulate(std::size_t genus);

/// The orientation convention: with trivial integer coefficients on the
/// torus, <alpha_a ∪ alpha_b, [Sigma]> = +1 where alpha_a, alpha_b are the
/// classes with holonomy 1 around a and b respectively.
inline constexpr int orientation_sign = +1;

class TwistedCochain {
 public:
  TwistedCochain(int degree, std::size_t rank, std::size_t simplices);
  TwistedCochain(int degree, std::size_t rank, std::vector<IntVector> values);

  int degree() const noexcept { return degree_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<IntVector>& values() const noexcept { return values_; }
  const IntVector& value(std::size_t simplex) const { return values_.at(simplex); }
  IntVector& value(std::size_t simplex) { return values_.at(simplex); }
  bool is_zero() const;

  friend TwistedCochain operator+(const TwistedCochain& a, const TwistedCochain& b);
  friend bool operator==(const TwistedCochain&, const TwistedCochain&) = default;

 private:
  int degree_;
  std::size_t rank_;
  std::vector<IntVector> values_;
};

TwistedCochain coboundary(const TwistedCochain& c, const TriangulatedSurface& t, const LatticeLocalSystem& rho);
bool cocycle_check(const TwistedCochain& c, const TriangulatedSurface& t, const LatticeLocalSystem& rho);

/// <p(c1 ∪ c2), [Sigma]> with the front-face/back-face rule.
Frac1 cup_evaluate(const TwistedCochain& c1, const TwistedCochain& c2, const SymmetricForm& p,
                   const TriangulatedSurface& t, const LatticeLocalSystem& rho);

/// A simplicial 1-cocycle whose holonomy around generator j is block j of
/// the given vector; the vector must lie in ker d1 (NotInKernel otherwise).
TwistedCochain class_of(const IntVector& h1_vector, const TriangulatedSurface& t, const LatticeLocalSystem& rho);

/// Holonomies around the generators, recovered by walking through the cone
/// point; the inverse of class_of on cocycles.
IntVector holonomies(const TwistedCochain& c, const TriangulatedSurface& t, const LatticeLocalSystem& rho);

}  // namespace qtorus
