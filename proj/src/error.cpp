#include "qtorus/error.hpp"

namespace qtorus {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquareMatrix: return "NonSquareMatrix";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ImageNotInKernel: return "ImageNotInKernel";
    case ErrorCode::NonInvertibleMonodromy: return "NonInvertibleMonodromy";
    case ErrorCode::BadGeneratorIndex: return "BadGeneratorIndex";
    case ErrorCode::RelationViolated: return "RelationViolated";
    case ErrorCode::NonUnimodular: return "NonUnimodular";
    case ErrorCode::UnsupportedGenus: return "UnsupportedGenus";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::NotInKernel: return "NotInKernel";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::BadComponent: return "BadComponent";
    case ErrorCode::InvalidRefinement: return "InvalidRefinement";
    case ErrorCode::MalformedFraction: return "MalformedFraction";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::TooManyComponents: return "TooManyComponents";
    case ErrorCode::OracleDisagreement: return "OracleDisagreement";
  }
  return "Unknown";
}

}  // namespace qtorus
