#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spearlab {

enum class ErrorCode {
  DimensionMismatch,
  ResourceCapExceeded,
  NotFullDimensional,
  UnboundedBody,
  EmptyBody,
  OriginNotInterior,
  NotUnitNorm,
  NotUnitDualNorm,
  NotNormOne,
  NonpositiveEpsilon,
  EmptyInput,
  ElementOutsideBall,
  SpaceMismatch,
  UnknownSpec,
  UnknownLabel,
  MalformedInput,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Base of every error raised by the library. Carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a vertex cap or pivot cap is exceeded.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what)
      : Error(ErrorCode::ResourceCapExceeded, what) {}
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) throw Error(code, what);
}

}  // namespace spearlab
