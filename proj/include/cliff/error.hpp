#pragma once

#include <stdexcept>
#include <string>

namespace cliff {

enum class ErrorKind {
  Parse,
  SignatureMismatch,
  Domain,          // precondition on the input value (wrong grade, parity, ...)
  NotInvertible,
  Decomposition,   // spectral / factorization failure
  Unsupported,     // signature or size outside the supported range
  Branch,          // logarithm branch ambiguity
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cliff
