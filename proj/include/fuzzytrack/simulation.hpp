#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fuzzytrack/fuzzy_inference.hpp"
#include "fuzzytrack/kalman.hpp"
#include "fuzzytrack/noise.hpp"

namespace fuzzytrack {

enum class TrajectoryFamily {
  /// c1 * exp(c2 * t)
  exp_growth,
  /// c1 * (1 - exp(-c2 * t))
  exp_saturating,
};

std::string_view to_string(TrajectoryFamily f);
std::optional<TrajectoryFamily> parse_family(std::string_view name);

struct TrajectorySpec {
  TrajectoryFamily family = TrajectoryFamily::exp_growth;
  double c1 = 1.0;
  double c2 = 0.05;
  std::size_t steps = 100;
  double period = 1.0;

  /// Default coefficients of each family: growth (1, 0.05), saturating (5, 0.1).
  static TrajectorySpec defaults(TrajectoryFamily family);

  void validate() const;
};

/// Truth positions at t = k * period for k = 1..steps.
std::vector<double> gen_trajectory(const TrajectorySpec& spec);

/// Sum of absolute differences; throws InvalidInput on length mismatch.
double error_sum(std::span<const double> filtered, std::span<const double> truth);

struct RunResult {
  std::size_t run_index = 0;
  std::uint64_t seed = 0;
  /// Fuzzy filter error sum.
  double c1 = 0.0;
  /// Kalman filter error sum.
  double c2 = 0.0;

  bool fuzzy_wins() const { return c1 < c2; }
};

struct MonteCarloSummary {
  /// Sorted by run_index.
  std::vector<RunResult> runs;

  double win_rate() const;
};

/// One noisy realization of `truth`, filtered by both filters.
RunResult run_comparison(std::span<const double> truth, double period,
                         const NoiseSpec& noise, const FuzzyController& control,
                         const KalmanParams& kalman = {});

RunResult run_comparison(const TrajectorySpec& spec, const NoiseSpec& noise,
                         const InferenceConfig& cfg = {},
                         const KalmanParams& kalman = {});

struct MonteCarloOptions {
  std::size_t runs = 30;
  std::uint64_t base_seed = 7;
  /// Worker threads; 0 picks the hardware concurrency, 1 runs serially.
  std::size_t threads = 0;
};

/// Run i uses seed base_seed + i. The result does not depend on `threads`.
MonteCarloSummary monte_carlo(const TrajectorySpec& spec, double variance,
                              const MonteCarloOptions& options,
                              const InferenceConfig& cfg = {},
                              const KalmanParams& kalman = {});

}  // namespace fuzzytrack
