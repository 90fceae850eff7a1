#include "qtorus/surface.hpp"

#include "qtorus/error.hpp"

namespace qtorus {

SurfaceGroup::SurfaceGroup(std::size_t genus) : genus_(genus) {
  for (std::size_t i = 0; i < genus; ++i) {
    const std::size_t a = 2 * i, b = 2 * i + 1;
    relator_.insert(relator_.end(), {Letter{a, 1}, Letter{b, 1}, Letter{a, -1}, Letter{b, -1}});
  }
}

std::string SurfaceGroup::generator_name(std::size_t j) {
  return std::string(j % 2 == 0 ? "a" : "b") + std::to_string(j / 2 + 1);
}

LatticeLocalSystem::LatticeLocalSystem(std::size_t genus, std::size_t rank, std::vector<IntMatrix> monodromy)
    : genus_(genus), rank_(rank), mon_(std::move(monodromy)) {
  if (mon_.size() != 2 * genus_)
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(2 * genus_) + " monodromy matrices, got " + std::to_string(mon_.size()));
  inv_.reserve(mon_.size());
  for (std::size_t j = 0; j < mon_.size(); ++j) {
    const IntMatrix& m = mon_[j];
    if (m.rows() != rank_ || m.cols() != rank_)
      throw Error(ErrorCode::DimensionMismatch, "monodromy of " + SurfaceGroup::generator_name(j) + " is not " +
                                                    std::to_string(rank_) + "x" + std::to_string(rank_));
    if (!is_unimodular(m))
      throw Error(ErrorCode::NonUnimodular,
                  "monodromy of " + SurfaceGroup::generator_name(j) + " is not invertible over Z");
    inv_.push_back(unimodular_inverse(m));
  }
}

LatticeLocalSystem LatticeLocalSystem::trivial(std::size_t genus, std::size_t rank) {
  return LatticeLocalSystem(genus, rank, std::vector<IntMatrix>(2 * genus, IntMatrix::identity(rank)));
}

IntMatrix LatticeLocalSystem::evaluate(const Word& word) const {
  IntMatrix m = IntMatrix::identity(rank_);
  for (const Letter& l : word) {
    if (l.generator >= mon_.size())
      throw Error(ErrorCode::BadGeneratorIndex, "generator index " + std::to_string(l.generator) + " out of range");
    m = m * (l.exponent > 0 ? mon_[l.generator] : inv_[l.generator]);
  }
  return m;
}

bool LatticeLocalSystem::satisfies_relation() const {
  return evaluate(SurfaceGroup(genus_).relator()) == IntMatrix::identity(rank_);
}

void LatticeLocalSystem::validate() const {
  if (!satisfies_relation())
    throw Error(ErrorCode::RelationViolated, "monodromy does not satisfy prod [A_i, B_i] = I");
}

LatticeLocalSystem LatticeLocalSystem::conjugate(const IntMatrix& p) const {
  const IntMatrix p_inv = unimodular_inverse(p);
  std::vector<IntMatrix> mats;
  for (const IntMatrix& m : mon_) mats.push_back(p * m * p_inv);
  return LatticeLocalSystem(genus_, rank_, std::move(mats));
}

LatticeLocalSystem LatticeLocalSystem::dual() const {
  std::vector<IntMatrix> mats;
  for (const IntMatrix& m : inv_) mats.push_back(m.transpose());
  return LatticeLocalSystem(genus_, rank_, std::move(mats));
}

// ---------------------------------------------------------------------------

IntMatrix fox_derivative(const Word& word, std::size_t gen_index, const LatticeLocalSystem& rho) {
  if (gen_index >= 2 * rho.genus())
    throw Error(ErrorCode::BadGeneratorIndex, "generator index " + std::to_string(gen_index) + " out of range");
  const std::size_t r = rho.rank();
  IntMatrix prefix = IntMatrix::identity(r);
  IntMatrix result(r, r);
  // d(uv) = du + u dv,  d(x) = 1,  d(x^-1) = -x^-1
  for (const Letter& l : word) {
    if (l.generator >= 2 * rho.genus())
      throw Error(ErrorCode::BadGeneratorIndex, "generator index " + std::to_string(l.generator) + " out of range");
    if (l.generator == gen_index) {
      if (l.exponent > 0)
        result = result + prefix;
      else
        result = result - prefix * rho.inverse(l.generator);
    }
    prefix = prefix * (l.exponent > 0 ? rho.matrix(l.generator) : rho.inverse(l.generator));
  }
  return result;
}

IntVector crossed_hom_value(const Word& word, const IntVector& cochain, const LatticeLocalSystem& rho) {
  const std::size_t r = rho.rank();
  if (cochain.size() != 2 * rho.genus() * r)
    throw Error(ErrorCode::DimensionMismatch, "1-cochain has wrong length");
  IntVector value(r);
  IntMatrix prefix = IntMatrix::identity(r);
  for (const Letter& l : word) {
    if (l.generator >= 2 * rho.genus())
      throw Error(ErrorCode::BadGeneratorIndex, "generator index " + std::to_string(l.generator) + " out of range");
    IntVector fx(cochain.begin() + l.generator * r, cochain.begin() + (l.generator + 1) * r);
    if (l.exponent > 0) {
      value = value + prefix * fx;
      prefix = prefix * rho.matrix(l.generator);
    } else {
      prefix = prefix * rho.inverse(l.generator);
      value = value - prefix * fx;
    }
  }
  return value;
}

CochainComplexSurface build_complex(const LatticeLocalSystem& rho) {
  rho.validate();
  const std::size_t r = rho.rank(), n = 2 * rho.genus();
  const Word relator = SurfaceGroup(rho.genus()).relator();
  IntMatrix d0(n * r, r), d1(r, n * r);
  const IntMatrix id = IntMatrix::identity(r);
  for (std::size_t j = 0; j < n; ++j) {
    const IntMatrix block0 = rho.matrix(j) - id;
    const IntMatrix block1 = fox_derivative(relator, j, rho);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k) {
        d0(j * r + i, k) = block0(i, k);
        d1(i, j * r + k) = block1(i, k);
      }
  }
  if (!(d1 * d0).is_zero()) throw Error(ErrorCode::RelationViolated, "d1 d0 != 0");
  return {std::move(d0), std::move(d1)};
}

TwistedCohomology twisted_cohomology(const LatticeLocalSystem& rho) {
  const CochainComplexSurface cx = build_complex(rho);
  TwistedCohomology h;
  h.h0_basis = kernel_basis(cx.d0);
  h.h0 = FgAbGroup(h.h0_basis.cols(), {});
  h.h1_gens = subquotient_presentation(kernel_basis(cx.d1), cx.d0);
  h.h1 = h.h1_gens.group;
  h.h2_gens = cokernel_presentation(cx.d1);
  h.h2 = h.h2_gens.group;
  return h;
}

bool invariants_coinvariants_check(const LatticeLocalSystem& rho) {
  const TwistedCohomology h = twisted_cohomology(rho);
  const std::size_t r = rho.rank();
  IntMatrix stacked(0, r), side_by_side(r, 0);
  for (const IntMatrix& m : rho.monodromy()) {
    const IntMatrix delta = m - IntMatrix::identity(r);
    stacked = vconcat(stacked, delta);
    side_by_side = hconcat(side_by_side, delta);
  }
  const FgAbGroup invariants(kernel_basis(stacked).cols(), {});
  return h.h0 == invariants && h.h2 == cokernel(side_by_side);
}

}  // namespace qtorus
