#include "normlab/error.hpp"

namespace normlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kReducible: return "REDUCIBLE";
    case ErrorCode::kNotMonic: return "NOT_MONIC";
    case ErrorCode::kNotSquarefree: return "NOT_SQUAREFREE";
    case ErrorCode::kPrecisionLoss: return "PRECISION_LOSS";
    case ErrorCode::kRamifiedPrime: return "RAMIFIED_PRIME";
    case ErrorCode::kNotPrime: return "NOT_PRIME";
    case ErrorCode::kNotTotallyReal: return "NOT_TOTALLY_REAL";
    case ErrorCode::kAnisotropyFailure: return "ANISOTROPY_FAILURE";
    case ErrorCode::kSingularMatrix: return "SINGULAR_MATRIX";
    case ErrorCode::kDimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::kZeroContent: return "ZERO_CONTENT";
    case ErrorCode::kNullComponent: return "NULL_COMPONENT";
    case ErrorCode::kAllBlocksNonzero: return "ALL_BLOCKS_NONZERO";
    case ErrorCode::kDimensionTooLarge: return "DIMENSION_TOO_LARGE";
    case ErrorCode::kEnumerationTooLarge: return "ENUMERATION_TOO_LARGE";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, std::string const& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace normlab
