#include "fuzzytrack/kalman.hpp"

#include <cmath>

#include "fuzzytrack/errors.hpp"

namespace fuzzytrack {

void KalmanState::validate() const {
  if (!(r > 0.0)) throw InvalidParameter("measurement variance r must be positive");
  if (!(q >= 0.0)) throw InvalidParameter("process variance q must be non-negative");
  if (!(p > 0.0)) throw InvalidParameter("covariance p must be positive");
}

KalmanStep kalman_step(double z, const KalmanState& s) {
  s.validate();
  const double predicted = s.p + s.q;
  const double gain = predicted / (predicted + s.r);
  KalmanState next = s;
  next.p = (1.0 - gain) * predicted;
  next.x_hat = s.x_hat + gain * (z - s.x_hat);
  return {next.x_hat, gain, next};
}

std::vector<double> run_kalman(std::span<const double> measurements,
                               const KalmanParams& params) {
  KalmanState state{.x_hat = 0.0, .p = params.p0, .q = params.q, .r = params.r};
  state.validate();
  std::vector<double> out;
  if (measurements.empty()) return out;
  out.reserve(measurements.size());
  state.x_hat = measurements.front();
  out.push_back(state.x_hat);
  for (double z : measurements.subspan(1)) {
    const KalmanStep step = kalman_step(z, state);
    out.push_back(step.estimate);
    state = step.state;
  }
  return out;
}

double steady_state_covariance(double q, double r) {
  if (!(r > 0.0) || !(q >= 0.0)) throw InvalidParameter("need q >= 0, r > 0");
  return 0.5 * (-q + std::sqrt(q * q + 4.0 * q * r));
}

}  // namespace fuzzytrack
