#include "radonkit/error.hpp"

namespace radonkit {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::UnknownGallery: return "unknown gallery name";
    case ErrorCode::InvalidPhantom: return "invalid phantom";
    case ErrorCode::Io: return "i/o error";
    case ErrorCode::MalformedHeader: return "malformed header";
    case ErrorCode::TruncatedPayload: return "truncated payload";
    case ErrorCode::DimensionMismatch: return "dimension mismatch";
    case ErrorCode::ZeroDenominator: return "zero denominator";
    case ErrorCode::EmptyMask: return "empty mask";
    case ErrorCode::InvalidReport: return "invalid report";
  }
  return "unknown error";
}

}  // namespace radonkit
