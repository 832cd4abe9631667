#pragma once

#include <span>
#include <vector>

namespace fuzzytrack {

/// Random-walk position model with F = G = H = 1:
///   x(k+1) = x(k) + u(k),  z(k) = x(k) + w(k),
/// E[u^2] = q, E[w^2] = r.
struct KalmanState {
  double x_hat = 0.0;
  /// Error covariance p(k|k).
  double p = 1.0;
  double q = 1.0;
  double r = 0.5;

  /// Throws InvalidParameter unless p > 0, q >= 0, r > 0.
  void validate() const;
};

struct KalmanParams {
  double q = 1.0;
  double r = 0.5;
  double p0 = 1.0;
};

struct KalmanStep {
  double estimate;
  double gain;
  KalmanState state;
};

/// One predict/update cycle against measurement z.
KalmanStep kalman_step(double z, const KalmanState& s);

/// Starts at x_hat = z(1), p = p0 and folds kalman_step over the rest.
std::vector<double> run_kalman(std::span<const double> measurements,
                               const KalmanParams& params = {});

/// Steady-state covariance p(k|k) of the scalar recursion, the positive root
/// of p^2 + q p - q r = 0.
double steady_state_covariance(double q, double r);

}  // namespace fuzzytrack
