#pragma once

// Exact integer linear algebra over Z: dense matrices with GMP entries,
// Smith normal form, kernels, cokernels and finitely generated abelian groups.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace qtorus {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long> values);
bool is_zero(const IntVector& v);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator*(const Integer& s, const IntVector& v);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  IntMatrix transpose() const;
  IntMatrix columns(std::size_t first, std::size_t count) const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
// [a | b]
IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
// [a ; b]
IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);

/// U·A·V = D with U, V unimodular and D diagonal, nonnegative, d1 | d2 | ...
struct SnfResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::vector<Integer> diagonal() const;
  std::size_t rank() const;
};

SnfResult smith_normal_form(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);
Integer determinant(const IntMatrix& a);
bool is_unimodular(const IntMatrix& a);
/// Inverse over Z; throws NonInvertibleMonodromy unless |det a| = 1.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// Z^free_rank ⊕ Z/d1 ⊕ ... ⊕ Z/dk in divisibility-chain form.
class FgAbGroup {
 public:
  FgAbGroup() = default;
  /// Accepts any list of nonnegative invariants; 1s are dropped, 0s become
  /// free summands and the rest is brought into divisibility-chain form.
  FgAbGroup(std::size_t free_rank, std::vector<Integer> torsion);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }
  Integer torsion_order() const;
  bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
  std::size_t generator_count() const noexcept { return free_rank_ + torsion_.size(); }

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;

  std::string to_string() const;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

/// A group together with representatives of its canonical generators,
/// stored as the columns of `generators` (free generators first, then the
/// torsion generators in the order of group.torsion()).
struct GroupPresentation {
  FgAbGroup group;
  IntMatrix generators;
};

FgAbGroup cokernel(const IntMatrix& a);
GroupPresentation cokernel_presentation(const IntMatrix& a);

/// Columns form a saturated Z-basis of ker(a) ⊆ Z^cols.
IntMatrix kernel_basis(const IntMatrix& a);

/// Coordinates x with basis·x = targets (column by column). Throws
/// ImageNotInKernel when some column is not in the Z-span of `basis`.
IntMatrix solve_in_span(const IntMatrix& basis, const IntMatrix& targets);

/// span(ker_basis) / span(img_gens), with generators in ambient coordinates.
GroupPresentation subquotient_presentation(const IntMatrix& ker_basis, const IntMatrix& img_gens);
FgAbGroup subquotient(const IntMatrix& ker_basis, const IntMatrix& img_gens);

}  // namespace qtorus
