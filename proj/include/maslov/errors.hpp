#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace maslov {

// Numerical and domain failures carry a stable machine-readable name that
// the CLI surfaces in reports (exit code 3). Malformed input is reported
// through ValidationError instead (exit code 2).
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define MASLOV_DEFINE_ERROR(NAME)                                  \
  class NAME : public Error {                                      \
   public:                                                         \
    explicit NAME(const std::string& m) : Error(#NAME, m) {}       \
  }

MASLOV_DEFINE_ERROR(RankDeficient);
MASLOV_DEFINE_ERROR(NotLagrangian);
MASLOV_DEFINE_ERROR(DimensionMismatch);
MASLOV_DEFINE_ERROR(NotTransversal);
MASLOV_DEFINE_ERROR(DegenerateForm);
MASLOV_DEFINE_ERROR(Undersampled);
MASLOV_DEFINE_ERROR(NotClosed);
MASLOV_DEFINE_ERROR(RetryExhausted);
MASLOV_DEFINE_ERROR(InconsistentOverlap);
MASLOV_DEFINE_ERROR(ValidationError);

#undef MASLOV_DEFINE_ERROR

}  // namespace maslov
