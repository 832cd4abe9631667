#include "fuzzytrack/tracking_filter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fuzzytrack/errors.hpp"

namespace fuzzytrack {

namespace {

void check_period(double period) {
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw InvalidParameter("sampling period must be positive and finite");
  }
}

}  // namespace

FilterState initial_state(double period) {
  check_period(period);
  FilterState s;
  s.period = period;
  return s;
}

double heading(double x_curr, double x_prev, double period) {
  check_period(period);
  return std::atan((x_curr - x_prev) / period);
}

double angle_difference(double x_k, const FilterState& s) {
  if (s.k < 2) {
    throw SequencingError("angle difference needs two filtered positions, have " +
                          std::to_string(s.k));
  }
  return heading(x_k, s.x_r_prev, s.period) - s.heading_prev;
}

FilterStep filter_step(std::size_t k, double x_k, const FilterState& s,
                       const FuzzyController& control) {
  check_period(s.period);
  if (k != s.k + 1) {
    throw SequencingError("expected step " + std::to_string(s.k + 1) +
                          ", got " + std::to_string(k));
  }

  FilterState next = s;
  next.k = k;
  double x_r = x_k;
  if (k > 2) {
    const double current = heading(x_k, s.x_r_prev, s.period);
    const double adjust = control(current - s.heading_prev);
    // theta + adjust + heading_prev == current + adjust
    const double limit = std::numbers::pi / 2.0 - kHeadingMargin;
    const double phi = std::clamp(current + adjust, -limit, limit);
    x_r = std::tan(phi) * s.period + s.x_r_prev;
  }
  next.x_r_prev2 = s.x_r_prev;
  next.x_r_prev = x_r;
  next.heading_prev =
      k >= 2 ? heading(x_r, s.x_r_prev, s.period) : 0.0;
  return {x_r, next};
}

FilterStep filter_step(double x_k, const FilterState& s,
                       const FuzzyController& control) {
  return filter_step(s.k + 1, x_k, s, control);
}

std::vector<double> run_filter(std::span<const double> measurements,
                               double period, const FuzzyController& control) {
  FilterState state = initial_state(period);
  std::vector<double> out;
  out.reserve(measurements.size());
  for (double x : measurements) {
    auto [position, next] = filter_step(x, state, control);
    out.push_back(position);
    state = next;
  }
  return out;
}

std::vector<double> run_filter(std::span<const double> measurements,
                               double period, const InferenceConfig& cfg) {
  return run_filter(measurements, period, FuzzyController(cfg));
}

}  // namespace fuzzytrack
