#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgb {

enum class ErrorKind {
  kInvalidParameter,
  kInvalidElement,
  kNotAGroup,
  kResourceLimit,
  kNotFound,
  kInvalidInput,
  kInvalidSpec,
  kNonIntegralResult,
  kInternalInconsistency,
  kIoError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by from_cayley_table when the table fails one of the group axioms.
// The witness holds the offending triple, element or row index.
class NotAGroupError : public Error {
 public:
  enum class Reason { kLatinSquare, kIdentity, kInverse, kAssociativity };

  NotAGroupError(Reason reason, std::vector<std::uint32_t> witness, const std::string& what)
      : Error(ErrorKind::kNotAGroup, what), reason_(reason), witness_(std::move(witness)) {}

  Reason reason() const noexcept { return reason_; }
  const std::vector<std::uint32_t>& witness() const noexcept { return witness_; }

 private:
  Reason reason_;
  std::vector<std::uint32_t> witness_;
};

}  // namespace sgb
