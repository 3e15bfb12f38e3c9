#pragma once

#include <stdexcept>
#include <string>

namespace radonkit {

enum class ErrorCode {
  InvalidArgument = 1,
  UnknownGallery,
  InvalidPhantom,
  Io,
  MalformedHeader,
  TruncatedPayload,
  DimensionMismatch,
  ZeroDenominator,
  EmptyMask,
  InvalidReport,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure in the library surfaces as this exception; the C API maps the
// code one-to-one onto rk_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace radonkit
