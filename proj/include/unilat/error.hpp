#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace unilat {

enum class ErrorCode {
  DuplicateElement,
  UnknownElement,
  UnknownElementInCover,
  InvalidCover,
  NotALattice,
  NotBounded,
  TooManyElements,
  NotComparable,
  CarrierMismatch,
  CarrierNotInterval,
  NotClosed,
  NotAUninorm,
  NotATnorm,
  NotATconorm,
  NotAClosure,
  NotAnInterior,
  NotCommutative,
  PartsDoNotCover,
  InvalidRequest,
  NoConsistentLattice,
  AmbiguousLattice,
  UnknownClaim,
  UnknownConstruction,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code is stable; the message is
/// for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace unilat
