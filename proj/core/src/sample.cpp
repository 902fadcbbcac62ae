#include "ltrcu/sample.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

namespace ltrcu {

namespace {

std::tuple<double, double, bool, int> row_key(const LtrcObservation& o) {
  return {o.obs_time, o.trunc_time, o.event, o.cause.value_or(0)};
}

}  // namespace

LtrcSample validate_sample(std::vector<LtrcObservation> rows) {
  if (rows.empty()) {
    throw Error(ErrorCode::empty_sample, "sample has no rows");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    auto fail = [i](const std::string& why) {
      throw Error(ErrorCode::invariant_violation,
                  "row " + std::to_string(i) + ": " + why);
    };
    if (!std::isfinite(r.obs_time) || r.obs_time <= 0.0) fail("obs_time must be finite and > 0");
    if (!std::isfinite(r.trunc_time) || r.trunc_time < 0.0) fail("trunc_time must be finite and >= 0");
    if (r.obs_time <= r.trunc_time) fail("obs_time must exceed trunc_time");
    if (r.cause.has_value()) {
      if (!r.event) fail("cause label on a censored row");
      if (*r.cause != 1 && *r.cause != 2) fail("cause label must be 1 or 2");
    }
  }

  LtrcSample s;
  s.obs_ = std::move(rows);
  const std::size_t n = s.obs_.size();

  s.sorted_index_.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.sorted_index_[i] = i;
  std::stable_sort(s.sorted_index_.begin(), s.sorted_index_.end(),
                   [&](std::size_t a, std::size_t b) {
                     return row_key(s.obs_[a]) < row_key(s.obs_[b]);
                   });

  s.sorted_obs_times_.reserve(n);
  s.sorted_trunc_times_.reserve(n);
  s.causes_complete_ = true;
  for (std::size_t k : s.sorted_index_) {
    const auto& r = s.obs_[k];
    s.sorted_obs_times_.push_back(r.obs_time);
    if (r.event) {
      s.sorted_failure_times_.push_back(r.obs_time);
      if (!r.cause.has_value()) s.causes_complete_ = false;
    } else {
      s.sorted_censor_times_.push_back(r.obs_time);
    }
  }
  for (const auto& r : s.obs_) s.sorted_trunc_times_.push_back(r.trunc_time);
  std::sort(s.sorted_trunc_times_.begin(), s.sorted_trunc_times_.end());
  return s;
}

std::size_t LtrcSample::risk_set_size(double t) const {
  // #{T_i >= t} - #{L_i > t}; every row with L_i > t also has T_i > t.
  const auto n_t_lt = static_cast<std::size_t>(
      std::lower_bound(sorted_obs_times_.begin(), sorted_obs_times_.end(), t) -
      sorted_obs_times_.begin());
  const auto n_l_le = static_cast<std::size_t>(
      std::upper_bound(sorted_trunc_times_.begin(), sorted_trunc_times_.end(), t) -
      sorted_trunc_times_.begin());
  const std::size_t at_or_after = size() - n_t_lt;
  const std::size_t entered_late = size() - n_l_le;
  return at_or_after - entered_late;
}

std::size_t LtrcSample::failure_count(double t) const {
  return static_cast<std::size_t>(
      std::upper_bound(sorted_failure_times_.begin(), sorted_failure_times_.end(), t) -
      sorted_failure_times_.begin());
}

std::size_t LtrcSample::censor_count(double t) const {
  return static_cast<std::size_t>(
      std::upper_bound(sorted_censor_times_.begin(), sorted_censor_times_.end(), t) -
      sorted_censor_times_.begin());
}

}  // namespace ltrcu
