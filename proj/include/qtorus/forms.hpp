#pragma once

// Q/Z-valued quadratic and bilinear forms on lattices. A value num/den in
// Q/Z stands for the root of unity exp(2 pi i num/den).

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qtorus/lattice.hpp"

namespace qtorus {

/// An element of Q/Z in lowest terms, 0 <= num < den.
class Frac1 {
 public:
  Frac1() : num_(0), den_(1) {}
  /// Reduces num/den modulo 1; den must be nonzero.
  Frac1(const Integer& num, const Integer& den);

  /// Parses the canonical string "num/den". Anything not already reduced
  /// (e.g. "1/1", "2/4", "-1/3") is rejected with MalformedFraction.
  static Frac1 parse(std::string_view text);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }

  std::string to_string() const { return num_.get_str() + "/" + den_.get_str(); }

  Frac1 operator-() const { return Frac1(-num_, den_); }
  friend Frac1 operator+(const Frac1& a, const Frac1& b);
  friend Frac1 operator-(const Frac1& a, const Frac1& b) { return a + (-b); }
  friend Frac1 operator*(const Integer& k, const Frac1& a) { return Frac1(k * a.num_, a.den_); }
  Frac1& operator+=(const Frac1& o) { return *this = *this + o; }

  friend bool operator==(const Frac1& a, const Frac1& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Frac1& a, const Frac1& b);

 private:
  Integer num_;
  Integer den_;
};

using FracMatrix = std::vector<std::vector<Frac1>>;

/// c ⊗ zeta: the form (x, y) -> zeta * (x^T c y).
struct BilinearData {
  IntMatrix c;
  Frac1 zeta;
};

/// Quadratic form stored by its values on the basis vectors and the
/// polarization on pairs of distinct basis vectors. A Q/Z-valued quadratic
/// form is in general not half of a bilinear form, so diag is kept apart.
class QuadraticForm {
 public:
  QuadraticForm() = default;
  explicit QuadraticForm(std::size_t rank);
  /// offdiag lists b(e_i, e_j) for i < j in lexicographic order.
  QuadraticForm(std::vector<Frac1> diag, const std::vector<Frac1>& offdiag);

  std::size_t rank() const noexcept { return diag_.size(); }
  const Frac1& diag(std::size_t i) const { return diag_.at(i); }
  /// b(e_i, e_j); on the diagonal this is 2 Q(e_i).
  const Frac1& pair(std::size_t i, std::size_t j) const { return pair_.at(i * rank() + j); }

  void set_diag(std::size_t i, const Frac1& v);
  void set_pair(std::size_t i, std::size_t j, const Frac1& v);

  std::vector<Frac1> offdiag() const;

  friend QuadraticForm operator+(const QuadraticForm& a, const QuadraticForm& b);
  friend QuadraticForm operator-(const QuadraticForm& a);
  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  std::vector<Frac1> diag_;
  std::vector<Frac1> pair_;
};

class SymmetricForm {
 public:
  SymmetricForm() = default;
  explicit SymmetricForm(std::size_t rank);
  /// Throws DimensionMismatch unless entries is square and symmetric.
  explicit SymmetricForm(FracMatrix entries);

  std::size_t rank() const noexcept { return entries_.size(); }
  const Frac1& entry(std::size_t i, std::size_t j) const { return entries_.at(i).at(j); }
  const FracMatrix& entries() const noexcept { return entries_; }
  bool is_zero() const;

  Frac1 operator()(const IntVector& x, const IntVector& y) const;

  friend bool operator==(const SymmetricForm&, const SymmetricForm&) = default;

 private:
  FracMatrix entries_;
};

struct LevelClassReport {
  QuadraticForm form;          // isomorphism class of the level
  std::size_t pi2_layer_rank;  // the automorphism layer is (Q/Z)^pi2_layer_rank
  bool e_infinity;

  std::string pi2_layer() const;
};

QuadraticForm quad_from_bilinear(const BilinearData& data);
/// Upper-triangular c with zeta = 1/N (N the lcm of all denominators of q);
/// quad_from_bilinear(bilinear_lift(q)) == q.
BilinearData bilinear_lift(const QuadraticForm& q);
Frac1 evaluate(const QuadraticForm& q, const IntVector& gamma);
SymmetricForm polarize(const QuadraticForm& q);
bool is_linear(const QuadraticForm& q);
/// A level lifts to an E-infinity level exactly when its symmetric form vanishes.
inline bool is_e_infinity_liftable(const QuadraticForm& q) { return is_linear(q); }
LevelClassReport level_classify(const QuadraticForm& q);
/// Q(A x) = Q(x) for every A and every x in {e_i} ∪ {e_i + e_j}.
bool invariance_check(const QuadraticForm& q, const std::vector<IntMatrix>& mats);

}  // namespace qtorus
