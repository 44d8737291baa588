#include "dsdisk/error.hpp"

namespace dsdisk {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidPerturbation: return "invalid-perturbation";
    case ErrorKind::kInvalidInstance: return "invalid-instance";
    case ErrorKind::kInvalidParams: return "invalid-params";
    case ErrorKind::kPreconditionViolation: return "precondition-violation";
    case ErrorKind::kInstanceTooLarge: return "instance-too-large";
    case ErrorKind::kNumericalFailure: return "numerical-failure";
    case ErrorKind::kCoverageAssertion: return "coverage-assertion-failure";
    case ErrorKind::kIterationCapExceeded: return "iteration-cap-exceeded";
    case ErrorKind::kParse: return "parse-error";
  }
  return "unknown";
}

}  // namespace dsdisk
