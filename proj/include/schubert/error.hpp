#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

enum class ErrorCode {
  invalid_argument = 1,
  capacity = 2,
  characteristic = 3,
  no_general_subspace = 4,
  not_enough_units = 5,
  singular_point = 6,
};

// Every failure raised by the core carries one of the codes above; the C API
// maps them one-to-one onto its status values.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::invalid_argument, what);
}

/// Hard cap on enumerated points / poset elements.
inline constexpr long kCapacityGuard = 10'000'000;

}  // namespace schubert
