#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclotome {

enum class ErrorCode {
  CompositeP,
  NoField,
  ZeroInverse,
  BadIndex,
  ZeroIndex,
  NotSkew,
  SameVertex,
  ZeroInD,
  WrongSize,
  NotTwoValued,
  NotAds,
  WrongResidue,
  NotCanonical,
  OutOfRange,
  TooLarge,
  UnsupportedN,
  Malformed,
};

std::string_view to_string(ErrorCode code);

/// Every precondition failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for refusals caused by size guards rather than malformed input.
  bool is_resource_guard() const noexcept { return code_ == ErrorCode::TooLarge; }

 private:
  ErrorCode code_;
};

}  // namespace cyclotome
