#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace duval {

enum class ErrorCode {
  InvalidParameter,
  InvalidCenter,
  LatticeMismatch,
  Overflow,
  OddBranchClass,
  InconsistentBranch,
  OddBranchIntersection,
  NotAPencil,
  Inadmissible,
  BadEvidence,
  BadPoint,
  InvalidTransform,
  NotConvertible,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every domain failure in the library is reported through this type; the
/// code is stable and is what the CLI maps onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace detail {

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace detail
}  // namespace duval
