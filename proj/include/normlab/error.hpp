#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace normlab {

enum class ErrorCode {
  kReducible,
  kNotMonic,
  kNotSquarefree,
  kPrecisionLoss,
  kRamifiedPrime,
  kNotPrime,
  kNotTotallyReal,
  kAnisotropyFailure,
  kSingularMatrix,
  kDimensionMismatch,
  kZeroContent,
  kNullComponent,
  kAllBlocksNonzero,
  kDimensionTooLarge,
  kEnumerationTooLarge,
  kInvalidArgument,
  kParseError,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as this exception; `code()` is stable and is
// what the CLI and tests match against.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace normlab
