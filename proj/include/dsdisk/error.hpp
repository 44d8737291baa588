#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dsdisk {

enum class ErrorKind {
  kInvalidPerturbation,
  kInvalidInstance,
  kInvalidParams,
  kPreconditionViolation,
  kInstanceTooLarge,
  kNumericalFailure,
  kCoverageAssertion,
  kIterationCapExceeded,
  kParse,
};

std::string_view ErrorKindName(ErrorKind kind);

// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dsdisk
