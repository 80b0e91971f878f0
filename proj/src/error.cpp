#include "sgb/error.hpp"

namespace sgb {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidParameter: return "invalid-parameter";
    case ErrorKind::kInvalidElement: return "invalid-element";
    case ErrorKind::kNotAGroup: return "not-a-group";
    case ErrorKind::kResourceLimit: return "resource-limit";
    case ErrorKind::kNotFound: return "not-found";
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kInvalidSpec: return "invalid-spec";
    case ErrorKind::kNonIntegralResult: return "non-integral-result";
    case ErrorKind::kInternalInconsistency: return "internal-inconsistency";
    case ErrorKind::kIoError: return "io-error";
  }
  return "unknown";
}

}  // namespace sgb
