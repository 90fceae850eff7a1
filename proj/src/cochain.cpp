#include "qtorus/cochain.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "qtorus/error.hpp"

namespace qtorus {

std::size_t TriangulatedSurface::count(int degree) const {
  switch (degree) {
    case 0: return 2;
    case 1: return edges_.size();
    case 2: return triangles_.size();
    default: return 0;
  }
}

int TriangulatedSurface::euler_characteristic() const {
  return static_cast<int>(count(0)) - static_cast<int>(count(1)) + static_cast<int>(count(2));
}

bool TriangulatedSurface::edges_have_two_cofaces() const {
  std::vector<int> uses(edges_.size(), 0);
  for (const Cell& tri : triangles_)
    for (const FaceRef& f : tri.faces) ++uses.at(f.simplex);
  return std::all_of(uses.begin(), uses.end(), [](int u) { return u == 2; });
}

bool TriangulatedSurface::fundamental_cycle_closed() const {
  std::vector<long> boundary(edges_.size(), 0);
  for (std::size_t t = 0; t < triangles_.size(); ++t)
    for (std::size_t i = 0; i < 3; ++i)
      boundary[triangles_[t].faces[i].simplex] += orientation_[t] * (i % 2 == 0 ? 1 : -1);
  return std::all_of(boundary.begin(), boundary.end(), [](long b) { return b == 0; });
}

bool TriangulatedSurface::vertex_links_are_circles() const {
  // Link nodes are edge ends (edge, 0 = tail / 1 = head); every triangle
  // corner joins the two edge ends meeting at that corner.
  const std::size_t nodes = 2 * edges_.size();
  auto vertex_of = [&](std::size_t node) {
    const Cell& e = edges_[node / 2];
    return node % 2 == 0 ? e.faces[1].simplex : e.faces[0].simplex;
  };
  std::vector<int> degree(nodes, 0);
  std::vector<std::size_t> parent(nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Cell& tri : triangles_) {
    // Vertex i of the triangle is the tail (end 0) of the face [w_i, w_j]
    // when i < j and its head (end 1) otherwise.
    for (std::size_t i = 0; i < 3; ++i) {
      std::vector<std::size_t> ends;
      for (std::size_t j = 0; j < 3; ++j) {
        if (j == i) continue;
        // face j omits vertex j; its vertices are the other two, in order.
        const std::size_t other = 3 - i - j;
        const std::size_t end = i < other ? 0 : 1;
        ends.push_back(2 * tri.faces[j].simplex + end);
      }
      if (vertex_of(ends[0]) != vertex_of(ends[1])) return false;
      ++degree[ends[0]];
      ++degree[ends[1]];
      parent[find(ends[0])] = find(ends[1]);
    }
  }
  if (!std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; })) return false;
  std::map<std::size_t, std::size_t> component_of_vertex;
  for (std::size_t n = 0; n < nodes; ++n) {
    auto [it, inserted] = component_of_vertex.emplace(vertex_of(n), find(n));
    if (!inserted && it->second != find(n)) return false;
  }
  return true;
}

TriangulatedSurface triangulate(std::size_t genus) {
  if (genus == 0) throw Error(ErrorCode::UnsupportedGenus, "the polygon model needs genus >= 1");
  TriangulatedSurface t;
  t.genus_ = genus;
  const Word relator = SurfaceGroup(genus).relator();
  const std::size_t sides = relator.size();

  t.corner_words_.resize(sides + 1);
  for (std::size_t k = 0; k < sides; ++k) {
    t.corner_words_[k + 1] = t.corner_words_[k];
    t.corner_words_[k + 1].push_back(relator[k]);
  }

  constexpr std::size_t v = TriangulatedSurface::corner_vertex;
  constexpr std::size_t c = TriangulatedSurface::cone_vertex;
  // Boundary edge j runs from the base corner to its translate by x_j.
  for (std::size_t j = 0; j < 2 * genus; ++j)
    t.edges_.push_back(Cell{{FaceRef{v, Word{Letter{j, 1}}}, FaceRef{v, Word{}}}});
  // Spoke k runs from corner k to the cone point.
  for (std::size_t k = 0; k < sides; ++k)
    t.edges_.push_back(Cell{{FaceRef{c, Word{}}, FaceRef{v, t.corner_words_[k]}}});

  for (std::size_t k = 0; k < sides; ++k) {
    const Letter& l = relator[k];
    if (l.exponent > 0) {
      // [P_k, P_{k+1}, c]
      t.triangles_.push_back(Cell{{FaceRef{t.spoke(k + 1), Word{}}, FaceRef{t.spoke(k), Word{}},
                                   FaceRef{l.generator, t.corner_words_[k]}}});
      t.orientation_.push_back(+1);
    } else {
      // [P_{k+1}, P_k, c]
      t.triangles_.push_back(Cell{{FaceRef{t.spoke(k), Word{}}, FaceRef{t.spoke(k + 1), Word{}},
                                   FaceRef{l.generator, t.corner_words_[k + 1]}}});
      t.orientation_.push_back(-1);
    }
  }

  if (t.euler_characteristic() != 2 - 2 * static_cast<int>(genus) || !t.edges_have_two_cofaces() ||
      !t.fundamental_cycle_closed() || !t.vertex_links_are_circles())
    throw Error(ErrorCode::ShapeMismatch, "polygon triangulation failed its own validity checks");
  return t;
}

// ---------------------------------------------------------------------------

TwistedCochain::TwistedCochain(int degree, std::size_t rank, std::size_t simplices)
    : degree_(degree), rank_(rank), values_(simplices, IntVector(rank)) {}

TwistedCochain::TwistedCochain(int degree, std::size_t rank, std::vector<IntVector> values)
    : degree_(degree), rank_(rank), values_(std::move(values)) {
  for (const IntVector& v : values_)
    if (v.size() != rank_) throw Error(ErrorCode::ShapeMismatch, "cochain value has wrong rank");
}

bool TwistedCochain::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const IntVector& v) { return qtorus::is_zero(v); });
}

TwistedCochain operator+(const TwistedCochain& a, const TwistedCochain& b) {
  if (a.degree_ != b.degree_ || a.rank_ != b.rank_ || a.values_.size() != b.values_.size())
    throw Error(ErrorCode::ShapeMismatch, "adding cochains of different shape");
  TwistedCochain s = a;
  for (std::size_t i = 0; i < s.values_.size(); ++i) s.values_[i] = a.values_[i] + b.values_[i];
  return s;
}

namespace {

void check_shape(const TwistedCochain& c, const TriangulatedSurface& t, const LatticeLocalSystem& rho) {
  if (c.degree() < 0 || c.degree() > 2) throw Error(ErrorCode::ShapeMismatch, "cochain degree must be 0, 1 or 2");
  if (c.rank() != rho.rank()) throw Error(ErrorCode::ShapeMismatch, "cochain rank differs from the local system");
  if (t.genus() != rho.genus()) throw Error(ErrorCode::ShapeMismatch, "triangulation and local system genus differ");
  if (c.values().size() != t.count(c.degree()))
    throw Error(ErrorCode::ShapeMismatch, "cochain has wrong number of simplices");
}

IntVector transported(const FaceRef& f, const TwistedCochain& c, const LatticeLocalSystem& rho) {
  const IntVector& v = c.value(f.simplex);
  return f.transport.empty() ? v : rho.evaluate(f.transport) * v;
}

}  // namespace

TwistedCochain coboundary(const TwistedCochain& c, const TriangulatedSurface& t, const LatticeLocalSystem& rho) {
  check_shape(c, t, rho);
  const int d = c.degree() + 1;
  TwistedCochain out(d, c.rank(), t.count(d));
  if (d > 2) return out;
  const std::vector<Cell>& cells = d == 1 ? t.edges() : t.triangles();
  for (std::size_t s = 0; s < cells.size(); ++s) {
    IntVector acc(c.rank());
    for (std::size_t i = 0; i < cells[s].faces.size(); ++i) {
      IntVector term = transported(cells[s].faces[i], c, rho);
      acc = i % 2 == 0 ? acc + term : acc - term;
    }
    out.value(s) = std::move(acc);
  }
  return out;
}

bool cocycle_check(const TwistedCochain& c, const TriangulatedSurface& t, const LatticeLocalSystem& rho) {
  return coboundary(c, t, rho).is_zero();
}

Frac1 cup_evaluate(const TwistedCochain& c1, const TwistedCochain& c2, const SymmetricForm& p,
                   const TriangulatedSurface& t, const LatticeLocalSystem& rho) {
  if (c1.degree() != 1 || c2.degree() != 1) throw Error(ErrorCode::ShapeMismatch, "cup_evaluate takes 1-cochains");
  if (p.rank() != rho.rank()) throw Error(ErrorCode::ShapeMismatch, "pairing rank differs from the local system");
  if (!cocycle_check(c1, t, rho) || !cocycle_check(c2, t, rho))
    throw Error(ErrorCode::NotACocycle, "cup_evaluate needs cocycles");
  Frac1 total;
  for (std::size_t s = 0; s < t.triangles().size(); ++s) {
    const Cell& tri = t.triangles()[s];
    // front face [w0, w1] is faces[2], back face [w1, w2] is faces[0]
    const Frac1 v = p(transported(tri.faces[2], c1, rho), transported(tri.faces[0], c2, rho));
    total += Integer(t.orientation()[s] * orientation_sign) * v;
  }
  return total;
}

TwistedCochain class_of(const IntVector& h1_vector, const TriangulatedSurface& t, const LatticeLocalSystem& rho) {
  const std::size_t r = rho.rank(), n = 2 * rho.genus();
  if (t.genus() != rho.genus()) throw Error(ErrorCode::ShapeMismatch, "triangulation and local system genus differ");
  if (h1_vector.size() != n * r) throw Error(ErrorCode::DimensionMismatch, "1-cochain has wrong length");
  const Word relator = SurfaceGroup(rho.genus()).relator();
  if (!is_zero(crossed_hom_value(relator, h1_vector, rho)))
    throw Error(ErrorCode::NotInKernel, "vector does not satisfy the surface relation (not in ker d1)");

  TwistedCochain c(1, r, t.count(1));
  for (std::size_t j = 0; j < n; ++j)
    c.value(t.boundary_edge(j)) = IntVector(h1_vector.begin() + j * r, h1_vector.begin() + (j + 1) * r);
  // Potential 0 at the cone point and f(w_k) at corner k.
  for (std::size_t k = 0; k < relator.size(); ++k)
    c.value(t.spoke(k)) = Integer(-1) * crossed_hom_value(t.corner_transport(k), h1_vector, rho);
  return c;
}

IntVector holonomies(const TwistedCochain& c, const TriangulatedSurface& t, const LatticeLocalSystem& rho) {
  check_shape(c, t, rho);
  if (c.degree() != 1) throw Error(ErrorCode::ShapeMismatch, "holonomies are defined for 1-cochains");
  const std::size_t r = rho.rank(), n = 2 * rho.genus();
  const Word relator = SurfaceGroup(rho.genus()).relator();
  IntVector out(n * r);
  std::vector<bool> seen(n, false);
  for (std::size_t k = 0; k < relator.size(); ++k) {
    const Letter& l = relator[k];
    if (l.exponent < 0 || seen[l.generator]) continue;
    seen[l.generator] = true;
    // corner k -> cone point -> corner k+1 crosses the boundary edge's translate by w_k
    const IntVector step = c.value(t.spoke(k)) - c.value(t.spoke(k + 1));
    const IntVector hol = unimodular_inverse(rho.evaluate(t.corner_transport(k))) * step;
    for (std::size_t i = 0; i < r; ++i) out[l.generator * r + i] = hol[i];
  }
  return out;
}

}  // namespace qtorus
