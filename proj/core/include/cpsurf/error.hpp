#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cpsurf {

enum class ErrorCode {
  kSumMismatch,
  kNonPositiveEntry,
  kNotAUnit,
  kMixedModulus,
  kWrongDimension,
  kNotPure2Complex,
  kVertexNotPresent,
  kVertexOutOfRange,
  kDuplicateFacet,
  kNotPseudomanifold,
  kNotASurface,
  kKTooSmall,
  kKTooLarge,
  kBadResidue,
  kUnknownSeries,
  kParseError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; `code()` identifies
// the failed precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cpsurf
