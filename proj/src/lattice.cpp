#include "qtorus/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "qtorus/error.hpp"

namespace qtorus {

IntVector make_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sizes differ");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sizes differ");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVector operator*(const Integer& s, const IntVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const {
  IntMatrix out(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = -a(i, j);
  return c;
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "hconcat row mismatch");
  IntMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "vconcat column mismatch");
  IntMatrix c(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) c(a.rows() + i, j) = b(i, j);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Smith normal form

std::vector<Integer> SnfResult::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

std::size_t SnfResult::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) ++r;
  return r;
}

namespace {

class SnfWorker {
 public:
  explicit SnfWorker(const IntMatrix& a)
      : d_(a), u_(IntMatrix::identity(a.rows())), v_(IntMatrix::identity(a.cols())) {}

  SnfResult run() {
    const std::size_t m = d_.rows(), n = d_.cols();
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      if (!move_min_to_pivot(t)) break;
      for (;;) {
        clear_cross(t);
        if (!fix_divisibility(t)) break;
      }
      if (d_(t, t) < 0) {
        d_.negate_row(t);
        u_.negate_row(t);
      }
    }
    return {std::move(u_), std::move(d_), std::move(v_)};
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    d_.swap_rows(a, b);
    u_.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    d_.swap_cols(a, b);
    v_.swap_cols(a, b);
  }

  // Smallest nonzero |entry| of the trailing block goes to (t, t).
  bool move_min_to_pivot(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < d_.rows(); ++i)
      for (std::size_t j = t; j < d_.cols(); ++j) {
        const Integer& x = d_(i, j);
        if (x == 0) continue;
        if (!found || abs(x) < best) {
          best = abs(x);
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Eliminates row t and column t outside the pivot.
  void clear_cross(std::size_t t) {
    for (;;) {
      const Integer p = d_(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < d_.rows(); ++i) {
        if (d_(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d_(i, t).get_mpz_t(), p.get_mpz_t());
        d_.add_row_multiple(i, t, -q);
        u_.add_row_multiple(i, t, -q);
        if (d_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d_.cols(); ++j) {
        if (d_(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d_(t, j).get_mpz_t(), p.get_mpz_t());
        d_.add_col_multiple(j, t, -q);
        v_.add_col_multiple(j, t, -q);
        if (d_(t, j) != 0) clean = false;
      }
      if (clean) return;
      // Remainders are strictly smaller than the pivot; promote the smallest.
      std::size_t bi = t, bj = t;
      Integer best = abs(d_(t, t));
      for (std::size_t i = t + 1; i < d_.rows(); ++i)
        if (d_(i, t) != 0 && abs(d_(i, t)) < best) {
          best = abs(d_(i, t));
          bi = i;
          bj = t;
        }
      for (std::size_t j = t + 1; j < d_.cols(); ++j)
        if (d_(t, j) != 0 && abs(d_(t, j)) < best) {
          best = abs(d_(t, j));
          bi = t;
          bj = j;
        }
      swap_rows(t, bi);
      swap_cols(t, bj);
    }
  }

  // If the pivot fails to divide some trailing entry, fold that row into
  // row t so the next clearing pass lowers the pivot.
  bool fix_divisibility(std::size_t t) {
    const Integer& p = d_(t, t);
    for (std::size_t i = t + 1; i < d_.rows(); ++i)
      for (std::size_t j = t + 1; j < d_.cols(); ++j) {
        if (mpz_divisible_p(d_(i, j).get_mpz_t(), p.get_mpz_t())) continue;
        d_.add_row_multiple(t, i, 1);
        u_.add_row_multiple(t, i, 1);
        return true;
      }
    return false;
  }

  IntMatrix d_;
  IntMatrix u_;
  IntMatrix v_;
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) { return SnfWorker(a).run(); }

std::size_t rank(const IntMatrix& a) { return smith_normal_form(a).rank(); }

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NonSquareMatrix, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) { return a.is_square() && abs(determinant(a)) == 1; }

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NonSquareMatrix, "inverse of non-square matrix");
  SnfResult s = smith_normal_form(a);
  if (s.D != IntMatrix::identity(a.rows()))
    throw Error(ErrorCode::NonInvertibleMonodromy, "matrix is not invertible over Z: " + a.to_string());
  return s.V * s.U;
}

// ---------------------------------------------------------------------------
// Finitely generated abelian groups

FgAbGroup::FgAbGroup(std::size_t free_rank, std::vector<Integer> torsion) : free_rank_(free_rank) {
  IntMatrix diag(torsion.size(), torsion.size());
  for (std::size_t i = 0; i < torsion.size(); ++i) diag(i, i) = torsion[i];
  for (const Integer& d : smith_normal_form(diag).diagonal()) {
    if (d == 0)
      ++free_rank_;
    else if (d > 1)
      torsion_.push_back(d);
  }
}

Integer FgAbGroup::torsion_order() const {
  Integer order = 1;
  for (const Integer& d : torsion_) order *= d;
  return order;
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << "Z";
    if (free_rank_ > 1) os << '^' << free_rank_;
    first = false;
  }
  for (const Integer& d : torsion_) {
    os << (first ? "" : " + ") << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

GroupPresentation cokernel_presentation(const IntMatrix& a) {
  const std::size_t m = a.rows();
  SnfResult s = smith_normal_form(a);
  const std::size_t r = s.rank();
  IntMatrix u_inv = unimodular_inverse(s.U);

  std::vector<IntVector> gens;
  std::vector<Integer> torsion;
  for (std::size_t i = r; i < m; ++i) gens.push_back(u_inv.column(i));
  for (std::size_t i = 0; i < r; ++i) {
    if (s.D(i, i) == 1) continue;
    torsion.push_back(s.D(i, i));
    gens.push_back(u_inv.column(i));
  }
  FgAbGroup group(m - r, torsion);
  return {std::move(group), IntMatrix::from_columns(m, gens)};
}

FgAbGroup cokernel(const IntMatrix& a) {
  SnfResult s = smith_normal_form(a);
  std::vector<Integer> torsion;
  for (const Integer& d : s.diagonal())
    if (d > 1) torsion.push_back(d);
  return FgAbGroup(a.rows() - s.rank(), std::move(torsion));
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SnfResult s = smith_normal_form(a);
  const std::size_t r = s.rank();
  return s.V.columns(r, a.cols() - r);
}

IntMatrix solve_in_span(const IntMatrix& basis, const IntMatrix& targets) {
  if (basis.rows() != targets.rows())
    throw Error(ErrorCode::DimensionMismatch, "basis and targets live in different ambient lattices");
  SnfResult s = smith_normal_form(basis);
  const std::size_t r = s.rank();
  IntMatrix ut = s.U * targets;
  IntMatrix y(basis.cols(), targets.cols());
  for (std::size_t j = 0; j < targets.cols(); ++j) {
    for (std::size_t i = 0; i < ut.rows(); ++i) {
      if (i < r) {
        if (!mpz_divisible_p(ut(i, j).get_mpz_t(), s.D(i, i).get_mpz_t()))
          throw Error(ErrorCode::ImageNotInKernel, "column " + std::to_string(j) + " is not in the lattice span");
        mpz_divexact(y(i, j).get_mpz_t(), ut(i, j).get_mpz_t(), s.D(i, i).get_mpz_t());
      } else if (ut(i, j) != 0) {
        throw Error(ErrorCode::ImageNotInKernel, "column " + std::to_string(j) + " is not in the rational span");
      }
    }
  }
  return s.V * y;
}

GroupPresentation subquotient_presentation(const IntMatrix& ker_basis, const IntMatrix& img_gens) {
  IntMatrix coords = solve_in_span(ker_basis, img_gens);
  GroupPresentation local = cokernel_presentation(coords);
  return {std::move(local.group), ker_basis * local.generators};
}

FgAbGroup subquotient(const IntMatrix& ker_basis, const IntMatrix& img_gens) {
  return cokernel(solve_in_span(ker_basis, img_gens));
}

}  // namespace qtorus
