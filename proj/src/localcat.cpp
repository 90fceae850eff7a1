#include "qtorus/localcat.hpp"

#include "qtorus/error.hpp"

namespace qtorus {

namespace {

void require_rank(std::size_t rank, const IntVector& v) {
  if (v.size() != rank) throw Error(ErrorCode::DimensionMismatch, "grading has wrong length");
}

}  // namespace

GradedObject::GradedObject(std::size_t rank, Support support) : rank_(rank) {
  for (const auto& [lambda, mult] : support) add(lambda, mult);
}

GradedObject GradedObject::unit(std::size_t rank) {
  GradedObject u(rank);
  u.add(IntVector(rank), 1);
  return u;
}

Integer GradedObject::multiplicity(const IntVector& lambda) const {
  auto it = support_.find(lambda);
  return it == support_.end() ? Integer(0) : it->second;
}

void GradedObject::add(const IntVector& lambda, const Integer& mult) {
  require_rank(rank_, lambda);
  if (mult <= 0) throw Error(ErrorCode::DimensionMismatch, "multiplicities must be positive");
  support_[lambda] += mult;
}

BraidedData::BraidedData(QuadraticForm q, FracMatrix beta) : q_(std::move(q)), beta_(std::move(beta)) {
  const std::size_t r = q_.rank();
  if (beta_.size() != r) throw Error(ErrorCode::InvalidRefinement, "refinement has wrong size");
  for (std::size_t i = 0; i < r; ++i) {
    if (beta_[i].size() != r) throw Error(ErrorCode::InvalidRefinement, "refinement is not square");
    if (beta_[i][i] != q_.diag(i)) throw Error(ErrorCode::InvalidRefinement, "beta[i][i] must equal Q(e_i)");
    for (std::size_t j = i + 1; j < r; ++j)
      if (beta_[i][j] + beta_[j][i] != q_.pair(i, j))
        throw Error(ErrorCode::InvalidRefinement, "beta[i][j] + beta[j][i] must equal b(e_i, e_j)");
  }
}

BraidedData standard_refinement(const QuadraticForm& q) {
  const std::size_t r = q.rank();
  FracMatrix beta(r, std::vector<Frac1>(r));
  for (std::size_t i = 0; i < r; ++i) {
    beta[i][i] = q.diag(i);
    for (std::size_t j = i + 1; j < r; ++j) beta[i][j] = q.pair(i, j);
  }
  return BraidedData(q, std::move(beta));
}

BraidedData perturb_refinement(const BraidedData& b, const IntMatrix& antisymmetric, const Frac1& phase) {
  const std::size_t r = b.rank();
  if (antisymmetric.rows() != r || antisymmetric.cols() != r)
    throw Error(ErrorCode::DimensionMismatch, "perturbation has wrong size");
  if (antisymmetric.transpose() != -antisymmetric)
    throw Error(ErrorCode::InvalidRefinement, "perturbation must be antisymmetric");
  FracMatrix beta = b.beta();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) beta[i][j] += antisymmetric(i, j) * phase;
  return BraidedData(b.form(), std::move(beta));
}

Frac1 braiding_phase(const BraidedData& b, const IntVector& lambda, const IntVector& mu) {
  const std::size_t r = b.rank();
  require_rank(r, lambda);
  require_rank(r, mu);
  Frac1 total;
  for (std::size_t i = 0; i < r; ++i) {
    if (lambda[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j)
      if (mu[j] != 0) total += Integer(lambda[i] * mu[j]) * b.beta()[i][j];
  }
  return total;
}

Frac1 double_braiding(const BraidedData& b, const IntVector& lambda1, const IntVector& lambda2) {
  return braiding_phase(b, lambda1, lambda2) + braiding_phase(b, lambda2, lambda1);
}

Frac1 twist(const BraidedData& b, const IntVector& lambda) {
  require_rank(b.rank(), lambda);
  return evaluate(b.form(), lambda);
}

bool balancing_check(const BraidedData& b, const IntVector& lambda1, const IntVector& lambda2) {
  const Frac1 lhs = twist(b, lambda1 + lambda2) - twist(b, lambda1) - twist(b, lambda2);
  return lhs == double_braiding(b, lambda1, lambda2);
}

bool hexagon_check(const PhaseFunction& phase, const IntVector& lambda1, const IntVector& lambda2,
                   const IntVector& lambda3) {
  const bool left = phase(lambda1 + lambda2, lambda3) == phase(lambda1, lambda3) + phase(lambda2, lambda3);
  const bool right = phase(lambda1, lambda2 + lambda3) == phase(lambda1, lambda2) + phase(lambda1, lambda3);
  return left && right;
}

bool hexagon_check(const BraidedData& b, const IntVector& lambda1, const IntVector& lambda2,
                   const IntVector& lambda3) {
  require_rank(b.rank(), lambda1);
  require_rank(b.rank(), lambda2);
  require_rank(b.rank(), lambda3);
  return hexagon_check([&b](const IntVector& x, const IntVector& y) { return braiding_phase(b, x, y); },
                       lambda1, lambda2, lambda3);
}

GradedObject fuse(const GradedObject& v, const GradedObject& w) {
  if (v.rank() != w.rank()) throw Error(ErrorCode::DimensionMismatch, "fusing objects of different rank");
  GradedObject out(v.rank());
  for (const auto& [mu, m] : v.support())
    for (const auto& [nu, n] : w.support()) out.add(mu + nu, m * n);
  return out;
}

}  // namespace qtorus
