#include "duval/error.hpp"

namespace duval {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::InvalidCenter: return "InvalidCenter";
    case ErrorCode::LatticeMismatch: return "LatticeMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::OddBranchClass: return "OddBranchClass";
    case ErrorCode::InconsistentBranch: return "InconsistentBranch";
    case ErrorCode::OddBranchIntersection: return "OddBranchIntersection";
    case ErrorCode::NotAPencil: return "NotAPencil";
    case ErrorCode::Inadmissible: return "Inadmissible";
    case ErrorCode::BadEvidence: return "BadEvidence";
    case ErrorCode::BadPoint: return "BadPoint";
    case ErrorCode::InvalidTransform: return "InvalidTransform";
    case ErrorCode::NotConvertible: return "NotConvertible";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

namespace detail {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer addition overflow");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer subtraction overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer multiplication overflow");
  return out;
}

}  // namespace detail
}  // namespace duval
