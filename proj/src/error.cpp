#include "lgroup/error.hpp"

namespace lgroup {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::shape_mismatch: return "ShapeMismatch";
    case ErrorCode::not_a_strong_unit: return "NotAStrongUnit";
    case ErrorCode::unbound_variable: return "UnboundVariable";
    case ErrorCode::not_maximal: return "NotMaximal";
    case ErrorCode::unknown_prime: return "UnknownPrime";
    case ErrorCode::not_in_join: return "NotInJoin";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::out_of_interval: return "OutOfInterval";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::internal_invariant_violation: return "InternalInvariantViolation";
  }
  return "Unknown";
}

}  // namespace lgroup
