#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lgroup {

enum class ErrorCode {
  shape_mismatch,
  not_a_strong_unit,
  unbound_variable,
  not_maximal,
  unknown_prime,
  not_in_join,
  length_mismatch,
  out_of_interval,
  parse_error,
  internal_invariant_violation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lgroup
