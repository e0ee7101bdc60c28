#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace permpow {

enum class Errc {
  Empty,
  NotSquare,
  NotSymmetric,
  NegativeEntry,
  DimensionMismatch,
  RepeatedIndex,
  IndexOutOfRange,
  ParseError,
  InvalidRotation,
  InvalidPartition,
  NotEquitable,
  QuotientNotSymmetric,
  NotRegular,
  NotConnected,
  NotDivisibleBy4,
  TooSmall,
  TooLarge,
};

std::string_view to_string(Errc code) noexcept;

/// Every recoverable failure in the library is reported through this type;
/// `code()` lets callers (the CLI in particular) branch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace permpow
