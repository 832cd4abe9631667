#include "fuzzytrack/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "fuzzytrack/errors.hpp"
#include "fuzzytrack/tracking_filter.hpp"

namespace fuzzytrack {

std::string_view to_string(TrajectoryFamily f) {
  switch (f) {
    case TrajectoryFamily::exp_growth:
      return "exp-growth";
    case TrajectoryFamily::exp_saturating:
      return "exp-saturating";
  }
  return "unknown";
}

std::optional<TrajectoryFamily> parse_family(std::string_view name) {
  if (name == "exp-growth") return TrajectoryFamily::exp_growth;
  if (name == "exp-saturating") return TrajectoryFamily::exp_saturating;
  return std::nullopt;
}

TrajectorySpec TrajectorySpec::defaults(TrajectoryFamily family) {
  TrajectorySpec spec;
  spec.family = family;
  if (family == TrajectoryFamily::exp_saturating) {
    spec.c1 = 5.0;
    spec.c2 = 0.1;
  }
  return spec;
}

void TrajectorySpec::validate() const {
  if (steps < 1) throw InvalidParameter("trajectory needs at least one step");
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw InvalidParameter("sampling period must be positive and finite");
  }
  if (!std::isfinite(c1) || !std::isfinite(c2)) {
    throw InvalidParameter("trajectory coefficients must be finite");
  }
}

std::vector<double> gen_trajectory(const TrajectorySpec& spec) {
  spec.validate();
  std::vector<double> out;
  out.reserve(spec.steps);
  for (std::size_t k = 1; k <= spec.steps; ++k) {
    const double t = static_cast<double>(k) * spec.period;
    switch (spec.family) {
      case TrajectoryFamily::exp_growth:
        out.push_back(spec.c1 * std::exp(spec.c2 * t));
        break;
      case TrajectoryFamily::exp_saturating:
        out.push_back(spec.c1 * (1.0 - std::exp(-spec.c2 * t)));
        break;
    }
  }
  for (double x : out) {
    if (!std::isfinite(x)) throw InvalidParameter("trajectory overflows");
  }
  return out;
}

double error_sum(std::span<const double> filtered, std::span<const double> truth) {
  if (filtered.size() != truth.size()) {
    throw InvalidInput("error_sum: length " + std::to_string(filtered.size()) +
                       " vs " + std::to_string(truth.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    sum += std::abs(filtered[i] - truth[i]);
  }
  return sum;
}

double MonteCarloSummary::win_rate() const {
  if (runs.empty()) return 0.0;
  const auto wins = std::count_if(runs.begin(), runs.end(),
                                  [](const RunResult& r) { return r.fuzzy_wins(); });
  return static_cast<double>(wins) / static_cast<double>(runs.size());
}

RunResult run_comparison(std::span<const double> truth, double period,
                         const NoiseSpec& noise, const FuzzyController& control,
                         const KalmanParams& kalman) {
  const std::vector<double> measured = add_noise(truth, noise);
  RunResult result;
  result.seed = noise.seed;
  result.c1 = error_sum(run_filter(measured, period, control), truth);
  result.c2 = error_sum(run_kalman(measured, kalman), truth);
  return result;
}

RunResult run_comparison(const TrajectorySpec& spec, const NoiseSpec& noise,
                         const InferenceConfig& cfg, const KalmanParams& kalman) {
  const std::vector<double> truth = gen_trajectory(spec);
  return run_comparison(truth, spec.period, noise, FuzzyController(cfg), kalman);
}

MonteCarloSummary monte_carlo(const TrajectorySpec& spec, double variance,
                              const MonteCarloOptions& options,
                              const InferenceConfig& cfg,
                              const KalmanParams& kalman) {
  if (options.runs < 1) throw InvalidParameter("monte carlo needs at least one run");
  NoiseSpec{variance, options.base_seed}.validate();
  const std::vector<double> truth = gen_trajectory(spec);
  const FuzzyController control(cfg);

  MonteCarloSummary summary;
  summary.runs.resize(options.runs);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < options.runs; i = next++) {
      try {
        const NoiseSpec noise{variance, options.base_seed + i};
        RunResult r = run_comparison(truth, spec.period, noise, control, kalman);
        r.run_index = i;
        summary.runs[i] = r;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  std::size_t threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, options.runs);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return summary;
}

}  // namespace fuzzytrack
