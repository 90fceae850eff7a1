#include "qtorus/forms.hpp"

#include <charconv>
#include <numeric>

#include "qtorus/error.hpp"

namespace qtorus {

Frac1::Frac1(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::MalformedFraction, "zero denominator");
  Integer d = abs(den);
  Integer n = den < 0 ? Integer(-num) : num;
  mpz_fdiv_r(n.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  Integer g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  num_ = n / g;
  den_ = d / g;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  // No leading zeros except for the literal "0".
  return s.size() == 1 || s.front() != '0';
}

}  // namespace

Frac1 Frac1::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    throw Error(ErrorCode::MalformedFraction, "expected \"num/den\", got \"" + std::string(text) + "\"");
  std::string_view n = text.substr(0, slash), d = text.substr(slash + 1);
  if (!all_digits(n) || !all_digits(d))
    throw Error(ErrorCode::MalformedFraction, "non-canonical fraction \"" + std::string(text) + "\"");
  const Integer num{std::string(n)}, den{std::string(d)};
  if (den == 0) throw Error(ErrorCode::MalformedFraction, "zero denominator in \"" + std::string(text) + "\"");
  Frac1 f(num, den);
  if (f.num_ != num || f.den_ != den)
    throw Error(ErrorCode::MalformedFraction,
                "fraction \"" + std::string(text) + "\" is not reduced into [0,1); write " + f.to_string());
  return f;
}

Frac1 operator+(const Frac1& a, const Frac1& b) {
  if (a.den_ == b.den_) return Frac1(a.num_ + b.num_, a.den_);
  return Frac1(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

std::strong_ordering operator<=>(const Frac1& a, const Frac1& b) {
  const Integer lhs = a.num_ * b.den_, rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

QuadraticForm::QuadraticForm(std::size_t rank) : diag_(rank), pair_(rank * rank) {}

QuadraticForm::QuadraticForm(std::vector<Frac1> diag, const std::vector<Frac1>& offdiag)
    : QuadraticForm(diag.size()) {
  const std::size_t r = diag.size();
  if (offdiag.size() != r * (r - (r ? 1 : 0)) / 2)
    throw Error(ErrorCode::DimensionMismatch, "offdiag must list b(e_i,e_j) for all i<j");
  for (std::size_t i = 0; i < r; ++i) set_diag(i, diag[i]);
  std::size_t k = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) set_pair(i, j, offdiag[k++]);
}

void QuadraticForm::set_diag(std::size_t i, const Frac1& v) {
  diag_.at(i) = v;
  pair_[i * rank() + i] = Integer(2) * v;
}

void QuadraticForm::set_pair(std::size_t i, std::size_t j, const Frac1& v) {
  if (i == j) throw Error(ErrorCode::DimensionMismatch, "set_pair needs distinct basis vectors");
  pair_.at(i * rank() + j) = v;
  pair_.at(j * rank() + i) = v;
}

std::vector<Frac1> QuadraticForm::offdiag() const {
  std::vector<Frac1> out;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i + 1; j < rank(); ++j) out.push_back(pair(i, j));
  return out;
}

QuadraticForm operator+(const QuadraticForm& a, const QuadraticForm& b) {
  if (a.rank() != b.rank()) throw Error(ErrorCode::DimensionMismatch, "levels of different rank");
  QuadraticForm s(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    s.set_diag(i, a.diag(i) + b.diag(i));
    for (std::size_t j = i + 1; j < a.rank(); ++j) s.set_pair(i, j, a.pair(i, j) + b.pair(i, j));
  }
  return s;
}

QuadraticForm operator-(const QuadraticForm& a) {
  QuadraticForm s(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    s.set_diag(i, -a.diag(i));
    for (std::size_t j = i + 1; j < a.rank(); ++j) s.set_pair(i, j, -a.pair(i, j));
  }
  return s;
}

// ---------------------------------------------------------------------------

SymmetricForm::SymmetricForm(std::size_t rank) : entries_(rank, std::vector<Frac1>(rank)) {}

SymmetricForm::SymmetricForm(FracMatrix entries) : entries_(std::move(entries)) {
  const std::size_t r = entries_.size();
  for (std::size_t i = 0; i < r; ++i) {
    if (entries_[i].size() != r) throw Error(ErrorCode::DimensionMismatch, "symmetric form must be square");
    for (std::size_t j = 0; j < i; ++j)
      if (entries_[i][j] != entries_[j][i])
        throw Error(ErrorCode::DimensionMismatch, "symmetric form entries are not symmetric");
  }
}

bool SymmetricForm::is_zero() const {
  for (const auto& row : entries_)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

Frac1 SymmetricForm::operator()(const IntVector& x, const IntVector& y) const {
  const std::size_t r = rank();
  if (x.size() != r || y.size() != r) throw Error(ErrorCode::DimensionMismatch, "vector length differs from rank");
  Frac1 total;
  for (std::size_t i = 0; i < r; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (y[j] == 0 || entries_[i][j].is_zero()) continue;
      total += Integer(x[i] * y[j]) * entries_[i][j];
    }
  }
  return total;
}

std::string LevelClassReport::pi2_layer() const { return "(Q/Z)^" + std::to_string(pi2_layer_rank); }

// ---------------------------------------------------------------------------

QuadraticForm quad_from_bilinear(const BilinearData& data) {
  const IntMatrix& c = data.c;
  if (!c.is_square()) throw Error(ErrorCode::NonSquareMatrix, "bilinear data must be square");
  const std::size_t r = c.rows();
  QuadraticForm q(r);
  for (std::size_t i = 0; i < r; ++i) {
    q.set_diag(i, c(i, i) * data.zeta);
    for (std::size_t j = i + 1; j < r; ++j) q.set_pair(i, j, Integer(c(i, j) + c(j, i)) * data.zeta);
  }
  return q;
}

BilinearData bilinear_lift(const QuadraticForm& q) {
  const std::size_t r = q.rank();
  Integer n = 1;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      const Frac1& v = i == j ? q.diag(i) : q.pair(i, j);
      mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), v.den().get_mpz_t());
    }
  IntMatrix c(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      const Frac1& v = i == j ? q.diag(i) : q.pair(i, j);
      c(i, j) = v.num() * (n / v.den());
    }
  return {std::move(c), Frac1(1, n)};
}

Frac1 evaluate(const QuadraticForm& q, const IntVector& gamma) {
  const std::size_t r = q.rank();
  if (gamma.size() != r) throw Error(ErrorCode::DimensionMismatch, "vector length differs from rank");
  Frac1 total;
  for (std::size_t i = 0; i < r; ++i) {
    if (gamma[i] == 0) continue;
    total += Integer(gamma[i] * gamma[i]) * q.diag(i);
    for (std::size_t j = i + 1; j < r; ++j)
      if (gamma[j] != 0) total += Integer(gamma[i] * gamma[j]) * q.pair(i, j);
  }
  return total;
}

SymmetricForm polarize(const QuadraticForm& q) {
  const std::size_t r = q.rank();
  FracMatrix b(r, std::vector<Frac1>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) b[i][j] = q.pair(i, j);
  return SymmetricForm(std::move(b));
}

bool is_linear(const QuadraticForm& q) { return polarize(q).is_zero(); }

LevelClassReport level_classify(const QuadraticForm& q) { return {q, q.rank(), is_linear(q)}; }

bool invariance_check(const QuadraticForm& q, const std::vector<IntMatrix>& mats) {
  const std::size_t r = q.rank();
  for (const IntMatrix& a : mats) {
    if (a.rows() != r || a.cols() != r)
      throw Error(ErrorCode::DimensionMismatch, "monodromy matrix size differs from the rank of the form");
    if (!is_unimodular(a))
      throw Error(ErrorCode::NonInvertibleMonodromy, "monodromy is not invertible over Z: " + a.to_string());
  }
  std::vector<IntVector> probes;
  for (std::size_t i = 0; i < r; ++i) {
    IntVector e(r);
    e[i] = 1;
    probes.push_back(e);
    for (std::size_t j = i + 1; j < r; ++j) {
      IntVector f(r);
      f[i] = 1;
      f[j] = 1;
      probes.push_back(f);
    }
  }
  for (const IntMatrix& a : mats)
    for (const IntVector& x : probes)
      if (evaluate(q, a * x) != evaluate(q, x)) return false;
  return true;
}

}  // namespace qtorus
