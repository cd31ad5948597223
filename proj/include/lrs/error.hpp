#pragma once

#include <stdexcept>
#include <string>

namespace lrs {

enum class ErrorKind {
  UnsupportedType,
  IndexOutOfRange,
  GroupTooLarge,
  MixedRootSystems,
  RankMismatch,
  NonDominantInput,
  OracleOverflow,
  InvalidWitness,
  Parse,
  Internal,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lrs
