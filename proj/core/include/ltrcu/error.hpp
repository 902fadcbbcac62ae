#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ltrcu {

enum class ErrorCode {
  empty_sample,
  invariant_violation,
  risk_set_empty,
  zero_weight_denominator,
  missing_cause_labels,
  missing_cause,
  sample_too_small,
  nonfinite_weight,
  degenerate_variance,
  parse_error,
  invalid_config,
  no_root,
  generation_stalled,
  invalid_probability,
};

/// True for errors caused by bad input data or configuration (CLI exit 2),
/// false for numeric/degenerate conditions hit during computation (exit 3).
inline bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::empty_sample:
    case ErrorCode::invariant_violation:
    case ErrorCode::missing_cause_labels:
    case ErrorCode::missing_cause:
    case ErrorCode::sample_too_small:
    case ErrorCode::parse_error:
    case ErrorCode::invalid_config:
      return true;
    default:
      return false;
  }
}

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::empty_sample: return "empty_sample";
    case ErrorCode::invariant_violation: return "invariant_violation";
    case ErrorCode::risk_set_empty: return "risk_set_empty";
    case ErrorCode::zero_weight_denominator: return "zero_weight_denominator";
    case ErrorCode::missing_cause_labels: return "missing_cause_labels";
    case ErrorCode::missing_cause: return "missing_cause";
    case ErrorCode::sample_too_small: return "sample_too_small";
    case ErrorCode::nonfinite_weight: return "nonfinite_weight";
    case ErrorCode::degenerate_variance: return "degenerate_variance";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::invalid_config: return "invalid_config";
    case ErrorCode::no_root: return "no_root";
    case ErrorCode::generation_stalled: return "generation_stalled";
    case ErrorCode::invalid_probability: return "invalid_probability";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ltrcu
