#pragma once

// JSON encodings shared by the CLI input and output formats. Fractions are
// "num/den" strings; integers are JSON numbers when they fit in 64 bits and
// decimal strings otherwise.

#include <string>

#include "json.hpp"
#include "qtorus/error.hpp"
#include "qtorus/global.hpp"
#include "qtorus/localcat.hpp"

namespace qtorus::report {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& x);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const Frac1& f);
Json to_json(const std::vector<Frac1>& v);
Json to_json(const FracMatrix& m);
Json to_json(const FgAbGroup& g);
Json to_json(const QuadraticForm& q);
Json to_json(const SymmetricForm& b);
Json to_json(const GradedObject& v);
Json to_json(const GerbeBlock& blk);
Json to_json(const SectionSpaceInvariants& s);

/// Decoders throw Error with the offending JSON pointer appended to the
/// message via ParseError.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& message, std::string path)
      : Error(code, message), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

Integer integer_from_json(const Json& j, const std::string& path);
IntVector vector_from_json(const Json& j, const std::string& path);
IntMatrix matrix_from_json(const Json& j, const std::string& path);
Frac1 frac_from_json(const Json& j, const std::string& path);
FgAbGroup group_from_json(const Json& j, const std::string& path);
GradedObject graded_from_json(const Json& j, std::size_t rank, const std::string& path);
/// {genus, rank, monodromy?}; missing monodromy means trivial. Validates
/// unimodularity and the surface relation.
LatticeLocalSystem local_system_from_json(const Json& j, const std::string& path);
/// {c_matrix, zeta}
BilinearData bilinear_from_json(const Json& j, const std::string& path);

/// Indented "key: value" rendering of a report for the text format.
std::string render_text(const Json& j);

}  // namespace qtorus::report
