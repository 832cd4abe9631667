#include "fuzzytrack/noise.hpp"

#include <cmath>
#include <numbers>

#include "fuzzytrack/errors.hpp"

namespace fuzzytrack {

double GaussianStream::operator()() {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  constexpr double kUnit = 0x1.0p-53;
  const double u1 = static_cast<double>((rng_() >> 11) + 1) * kUnit;
  const double u2 = static_cast<double>(rng_() >> 11) * kUnit;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

void NoiseSpec::validate() const {
  if (!(variance >= 0.0)) {
    throw InvalidParameter("noise variance must be non-negative");
  }
  if (!(variance < 0.5)) {
    throw InvalidParameter("noise variance must be below 0.5");
  }
}

std::vector<double> add_noise(std::span<const double> truth,
                              const NoiseSpec& noise) {
  noise.validate();
  const double scale = std::sqrt(noise.variance);
  GaussianStream normal(noise.seed);
  std::vector<double> out;
  out.reserve(truth.size());
  for (double x : truth) out.push_back(x + scale * normal());
  return out;
}

}  // namespace fuzzytrack
