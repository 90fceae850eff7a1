#include "qtorus/report.hpp"

#include <sstream>

namespace qtorus::report {

namespace {

[[noreturn]] void fail(ErrorCode code, const std::string& message, const std::string& path) {
  throw ParseError(code, message, path);
}

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(ErrorCode::BadSpec, "expected an object", path);
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorCode::BadSpec, "missing field \"" + key + "\"", child(path, key));
  return *it;
}

std::size_t size_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    fail(ErrorCode::BadSpec, "expected a non-negative integer", path);
  return j.get<std::size_t>();
}

}  // namespace

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const Integer& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const Frac1& f) { return Json(f.to_string()); }

Json to_json(const std::vector<Frac1>& v) {
  Json out = Json::array();
  for (const Frac1& f : v) out.push_back(to_json(f));
  return out;
}

Json to_json(const FracMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(to_json(row));
  return out;
}

Json to_json(const FgAbGroup& g) {
  Json out;
  out["free_rank"] = g.free_rank();
  out["torsion"] = to_json(g.torsion());
  return out;
}

Json to_json(const QuadraticForm& q) {
  Json out;
  std::vector<Frac1> diag;
  for (std::size_t i = 0; i < q.rank(); ++i) diag.push_back(q.diag(i));
  out["diag"] = to_json(diag);
  out["offdiag"] = to_json(q.offdiag());
  return out;
}

Json to_json(const SymmetricForm& b) { return to_json(b.entries()); }

Json to_json(const GradedObject& v) {
  Json out = Json::array();
  for (const auto& [lambda, mult] : v.support()) {
    Json piece;
    piece["lambda"] = to_json(lambda);
    piece["mult"] = to_json(mult);
    out.push_back(std::move(piece));
  }
  return out;
}

Json to_json(const GerbeBlock& blk) {
  Json out;
  out["component"] = to_json(blk.component);
  out["omega"] = to_json(blk.omega);
  out["pi2_character"] = to_json(blk.pi2_character);
  out["radical_rank"] = blk.radical_rank;
  out["block_dim"] = to_json(blk.block_dim);
  return out;
}

Json to_json(const SectionSpaceInvariants& s) {
  Json out;
  out["pi0"] = to_json(s.pi0);
  out["pi1"] = to_json(s.pi1);
  out["pi2"] = to_json(s.pi2);
  return out;
}

// ---------------------------------------------------------------------------

Integer integer_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    return Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) fail(ErrorCode::BadSpec, "not a decimal integer", path);
    return x;
  }
  fail(ErrorCode::BadSpec, "expected an integer", path);
}

IntVector vector_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(ErrorCode::BadSpec, "expected an array of integers", path);
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(integer_from_json(j[i], child(path, i)));
  return v;
}

IntMatrix matrix_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(ErrorCode::BadSpec, "expected a non-empty array of rows", path);
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(vector_from_json(j[i], child(path, i)));
  const std::size_t cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(ErrorCode::DimensionMismatch, "ragged matrix", child(path, i));
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rows[i][k];
  }
  return m;
}

Frac1 frac_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(ErrorCode::MalformedFraction, "fractions are written as \"num/den\" strings", path);
  try {
    return Frac1::parse(j.get<std::string>());
  } catch (const Error& e) {
    fail(e.code(), e.what(), path);
  }
}

FgAbGroup group_from_json(const Json& j, const std::string& path) {
  const std::size_t free_rank = size_from_json(field(j, "free_rank", path), child(path, "free_rank"));
  const IntVector torsion = vector_from_json(field(j, "torsion", path), child(path, "torsion"));
  return FgAbGroup(free_rank, torsion);
}

GradedObject graded_from_json(const Json& j, std::size_t rank, const std::string& path) {
  if (!j.is_array()) fail(ErrorCode::BadSpec, "expected a list of {lambda, mult}", path);
  GradedObject v(rank);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = child(path, i);
    const IntVector lambda = vector_from_json(field(j[i], "lambda", at), child(at, "lambda"));
    if (lambda.size() != rank) fail(ErrorCode::DimensionMismatch, "grading has wrong length", child(at, "lambda"));
    const Json* mult = j[i].contains("mult") ? &j[i]["mult"] : nullptr;
    const Integer m = mult ? integer_from_json(*mult, child(at, "mult")) : Integer(1);
    if (m <= 0) fail(ErrorCode::DimensionMismatch, "multiplicities must be positive", child(at, "mult"));
    v.add(lambda, m);
  }
  return v;
}

LatticeLocalSystem local_system_from_json(const Json& j, const std::string& path) {
  const std::size_t genus = size_from_json(field(j, "genus", path), child(path, "genus"));
  const std::size_t rank = size_from_json(field(j, "rank", path), child(path, "rank"));
  if (rank == 0) fail(ErrorCode::BadSpec, "rank must be positive", child(path, "rank"));
  if (genus > 64) fail(ErrorCode::UnsupportedGenus, "genus too large", child(path, "genus"));
  if (!j.contains("monodromy") || j["monodromy"].is_null()) return LatticeLocalSystem::trivial(genus, rank);

  const std::string at = child(path, "monodromy");
  const Json& mj = j["monodromy"];
  if (!mj.is_array()) fail(ErrorCode::BadSpec, "expected a list of matrices", at);
  if (mj.size() != 2 * genus)
    fail(ErrorCode::DimensionMismatch, "expected " + std::to_string(2 * genus) + " monodromy matrices", at);
  std::vector<IntMatrix> mats;
  for (std::size_t k = 0; k < mj.size(); ++k) {
    IntMatrix m = matrix_from_json(mj[k], child(at, k));
    if (m.rows() != rank || m.cols() != rank)
      fail(ErrorCode::DimensionMismatch, "matrix is not " + std::to_string(rank) + "x" + std::to_string(rank),
           child(at, k));
    if (!is_unimodular(m)) fail(ErrorCode::NonUnimodular, "matrix is not invertible over Z", child(at, k));
    mats.push_back(std::move(m));
  }
  LatticeLocalSystem rho(genus, rank, std::move(mats));
  if (!rho.satisfies_relation())
    fail(ErrorCode::RelationViolated, "monodromy does not satisfy prod [A_i, B_i] = I", at);
  return rho;
}

BilinearData bilinear_from_json(const Json& j, const std::string& path) {
  IntMatrix c = matrix_from_json(field(j, "c_matrix", path), child(path, "c_matrix"));
  if (!c.is_square()) fail(ErrorCode::NonSquareMatrix, "c_matrix must be square", child(path, "c_matrix"));
  const Frac1 zeta = frac_from_json(field(j, "zeta", path), child(path, "zeta"));
  return {std::move(c), zeta};
}

// ---------------------------------------------------------------------------

namespace {

bool is_scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const Json& x : j)
    if (x.is_structured()) return false;
  return true;
}

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string inline_array(const Json& j) {
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar(j[i]);
  return s + "]";
}

void render(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured() && !is_scalar_array(value)) {
        os << pad << key << ":\n";
        render(os, value, indent + 2);
      } else {
        os << pad << key << ": " << (value.is_array() ? inline_array(value) : scalar(value)) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      const Json& value = j[i];
      if (value.is_object()) {
        os << pad << "- #" << i << "\n";
        render(os, value, indent + 2);
      } else if (is_scalar_array(value)) {
        os << pad << "- " << inline_array(value) << "\n";
      } else if (value.is_array()) {
        os << pad << "- #" << i << "\n";
        render(os, value, indent + 2);
      } else {
        os << pad << "- " << scalar(value) << "\n";
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(os, j, 0);
  return os.str();
}

}  // namespace qtorus::report
