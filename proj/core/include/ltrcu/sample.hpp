#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ltrcu/error.hpp"

namespace ltrcu {

/// One subject under left truncation and right censoring.
/// Stored rows are always observed, i.e. obs_time > trunc_time.
struct LtrcObservation {
  double trunc_time = 0.0;          // entry time L
  double obs_time = 0.0;            // T = min(lifetime, censoring time)
  bool event = false;               // true if the failure was observed
  std::optional<int> cause;         // cause label in {1,2}, present iff event

  friend bool operator==(const LtrcObservation&, const LtrcObservation&) = default;
};

/// Validated immutable collection of observations with a cached canonical
/// sort order (by obs_time, ties broken on the full row). All operations are
/// pure and safe for concurrent reads.
class LtrcSample {
 public:
  std::size_t size() const { return obs_.size(); }
  const LtrcObservation& operator[](std::size_t i) const { return obs_[i]; }
  const std::vector<LtrcObservation>& observations() const { return obs_; }

  /// Permutation such that obs_time is nondecreasing along it.
  const std::vector<std::size_t>& sorted_index() const { return sorted_index_; }

  std::size_t n_failures() const { return sorted_failure_times_.size(); }
  std::size_t n_censored() const { return sorted_censor_times_.size(); }

  /// True if every failure row carries a cause label.
  bool has_cause_labels() const { return causes_complete_; }

  /// Y(t) = #{i : T_i >= t >= L_i}: entered before t and still under study.
  std::size_t risk_set_size(double t) const;

  /// N(t) = #{i : T_i <= t, event}; nondecreasing in t.
  std::size_t failure_count(double t) const;

  /// N^c(t) = #{i : T_i <= t, censored}; nondecreasing in t.
  std::size_t censor_count(double t) const;

  /// Distinct failure / censoring times, ascending.
  const std::vector<double>& failure_times() const { return sorted_failure_times_; }
  const std::vector<double>& censor_times() const { return sorted_censor_times_; }

  friend bool operator==(const LtrcSample& a, const LtrcSample& b) {
    return a.obs_ == b.obs_;
  }

  friend LtrcSample validate_sample(std::vector<LtrcObservation> rows);

 private:
  LtrcSample() = default;

  std::vector<LtrcObservation> obs_;
  std::vector<std::size_t> sorted_index_;
  std::vector<double> sorted_obs_times_;      // all T, ascending
  std::vector<double> sorted_trunc_times_;    // all L, ascending
  std::vector<double> sorted_failure_times_;  // T of event rows, ascending
  std::vector<double> sorted_censor_times_;   // T of censored rows, ascending
  bool causes_complete_ = false;
};

/// Checks every row invariant (finite positive T, L >= 0, T > L, cause
/// present iff event) and builds the sort index.
/// Throws Error{empty_sample} or Error{invariant_violation}.
LtrcSample validate_sample(std::vector<LtrcObservation> rows);

inline std::size_t risk_set_size(const LtrcSample& s, double t) { return s.risk_set_size(t); }
inline std::size_t failure_count(const LtrcSample& s, double t) { return s.failure_count(t); }
inline std::size_t censor_count(const LtrcSample& s, double t) { return s.censor_count(t); }

}  // namespace ltrcu
