#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fuzzytrack/fuzzy_inference.hpp"

namespace fuzzytrack {

/// Margin kept between the adjusted heading and +-pi/2.
inline constexpr double kHeadingMargin = 1e-3;

/// Rolling state of the fuzzy tracker after step k.
struct FilterState {
  /// Number of measurements consumed so far.
  std::size_t k = 0;
  /// Filtered position at k (the previous position for the next step).
  double x_r_prev = 0.0;
  /// Filtered position at k - 1.
  double x_r_prev2 = 0.0;
  /// Heading of the last filtered segment, atan((x_r_prev - x_r_prev2) / T).
  double heading_prev = 0.0;
  double period = 1.0;
};

/// Initial state for sampling period T; throws InvalidParameter unless T > 0.
FilterState initial_state(double period);

/// atan((x_curr - x_prev) / period), in (-pi/2, pi/2).
double heading(double x_curr, double x_prev, double period);

/// Heading change between the measured segment and the last filtered
/// segment. Requires s.k >= 2, otherwise throws SequencingError.
double angle_difference(double x_k, const FilterState& s);

struct FilterStep {
  double position;
  FilterState state;
};

/// Consumes measurement number k (1-based, must equal s.k + 1).
/// The first two measurements pass through unchanged.
FilterStep filter_step(std::size_t k, double x_k, const FilterState& s,
                       const FuzzyController& control);

/// Convenience overload that advances to k = s.k + 1.
FilterStep filter_step(double x_k, const FilterState& s,
                       const FuzzyController& control);

/// Filters a whole series sampled every `period`.
std::vector<double> run_filter(std::span<const double> measurements,
                               double period, const FuzzyController& control);

std::vector<double> run_filter(std::span<const double> measurements,
                               double period, const InferenceConfig& cfg = {});

}  // namespace fuzzytrack
