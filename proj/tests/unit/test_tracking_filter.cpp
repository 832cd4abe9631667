#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fuzzytrack/errors.hpp"
#include "fuzzytrack/tracking_filter.hpp"

using namespace fuzzytrack;
using doctest::Approx;
using std::numbers::pi;

namespace {

FilterState bootstrapped(double x1, double x2, double period,
                         const FuzzyController& control) {
  FilterState s = initial_state(period);
  s = filter_step(x1, s, control).state;
  return filter_step(x2, s, control).state;
}

}  // namespace

TEST_CASE("heading") {
  CHECK(heading(2.0, 2.0, 0.5) == 0.0);
  CHECK(heading(3.5, 3.0, 0.5) == Approx(pi / 4));
  CHECK(heading(2.0, 0.0, 1.0) == Approx(1.1071487177940904).epsilon(1e-15));
  CHECK(heading(-1e9, 0.0, 1.0) > -pi / 2);
  CHECK_THROWS_AS(heading(1.0, 0.0, 0.0), InvalidParameter);
  CHECK_THROWS_AS(heading(1.0, 0.0, -1.0), InvalidParameter);
  CHECK_THROWS_AS(initial_state(0.0), InvalidParameter);
}

TEST_CASE("angle difference") {
  const FuzzyController control;
  SUBCASE("collinear") {
    const FilterState s = bootstrapped(1.0, 2.5, 1.0, control);
    CHECK(angle_difference(4.0, s) == Approx(0.0));
  }
  SUBCASE("bending up and its mirror") {
    CHECK(angle_difference(3.0, bootstrapped(0.0, 1.0, 1.0, control)) ==
          Approx(0.3217505543966422).epsilon(1e-14));
    CHECK(angle_difference(-3.0, bootstrapped(0.0, -1.0, 1.0, control)) ==
          Approx(-0.3217505543966422).epsilon(1e-14));
  }
  SUBCASE("needs two filtered positions") {
    FilterState s = initial_state(1.0);
    CHECK_THROWS_AS(angle_difference(1.0, s), SequencingError);
    s = filter_step(1.0, s, control).state;
    CHECK_THROWS_AS(angle_difference(1.0, s), SequencingError);
  }
}

TEST_CASE("filter_step") {
  const FuzzyController control;
  SUBCASE("bootstrap passes measurements through") {
    FilterState s = initial_state(1.0);
    auto first = filter_step(1, 3.7, s, control);
    CHECK(first.position == 3.7);
    CHECK(first.state.k == 1);
    auto second = filter_step(2, -1.2, first.state, control);
    CHECK(second.position == -1.2);
    CHECK(second.state.x_r_prev == -1.2);
    CHECK(second.state.x_r_prev2 == 3.7);
    CHECK(second.state.heading_prev == Approx(std::atan(-4.9)));
  }
  SUBCASE("third step golden") {
    // tan(atan(2) + adjust(0.321751)) + 1 from tests/oracle/reference.py
    const FilterState s = bootstrapped(0.0, 1.0, 1.0, control);
    const FilterStep step = filter_step(3, 3.0, s, control);
    CHECK(step.position == Approx(2.5469900298212957).epsilon(1e-12));
    CHECK(step.state.heading_prev == Approx(std::atan(step.position - 1.0)));
    CHECK(step.state.x_r_prev2 == 1.0);
  }
  SUBCASE("out of order steps") {
    const FilterState s = initial_state(1.0);
    CHECK_THROWS_AS(filter_step(2, 1.0, s, control), SequencingError);
    CHECK_THROWS_AS(filter_step(0, 1.0, s, control), SequencingError);
    const FilterState s1 = filter_step(1, 1.0, s, control).state;
    CHECK_THROWS_AS(filter_step(1, 1.0, s1, control), SequencingError);
  }
  SUBCASE("huge jump is clamped") {
    const FilterState s = bootstrapped(0.0, 1e6, 1.0, control);
    const FilterStep step = filter_step(3, 1e12, s, control);
    const double bound = std::tan(pi / 2 - kHeadingMargin) * 1.0;
    CHECK(std::isfinite(step.position));
    CHECK(std::abs(step.position - 1e6) <= bound * (1 + 1e-12));
  }
}

TEST_CASE("run_filter") {
  const InferenceConfig cfg;
  CHECK(run_filter(std::vector<double>{}, 1.0, cfg).empty());
  CHECK(run_filter(std::vector<double>{5.0}, 1.0, cfg) == std::vector<double>{5.0});
  const std::vector<double> flat(50, -2.25);
  CHECK(run_filter(flat, 0.1, cfg) == flat);
  CHECK_THROWS_AS(run_filter(flat, 0.0, cfg), InvalidParameter);
}

TEST_CASE("constant-velocity inputs are reproduced exactly") {
  const FuzzyController control;
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> offset(-50, 50);
  std::uniform_real_distribution<double> speed(-20, 20);
  std::uniform_real_distribution<double> period(0.01, 5);
  for (int trial = 0; trial < 40; ++trial) {
    const double b = offset(gen), v = speed(gen), T = period(gen);
    std::vector<double> line;
    for (int k = 1; k <= 100; ++k) line.push_back(b + v * k * T);
    const std::vector<double> out = run_filter(line, T, control);
    for (std::size_t i = 0; i < line.size(); ++i) {
      CHECK(std::abs(out[i] - line[i]) < 1e-9 * std::max(1.0, std::abs(line[i])));
    }
  }
}

TEST_CASE("properties on random noisy tracks") {
  const FuzzyController control;
  std::mt19937_64 gen(1234);
  std::normal_distribution<double> noise(0.0, 0.7);
  std::uniform_real_distribution<double> period(0.05, 3.0);
  for (int trial = 0; trial < 25; ++trial) {
    const double T = period(gen);
    std::vector<double> x;
    for (int k = 1; k <= 60; ++k) x.push_back(std::sin(0.1 * k) * 4 + noise(gen));
    const std::vector<double> out = run_filter(x, T, control);
    REQUIRE(out.size() == x.size());

    // Determinism: bit-identical on repeat.
    CHECK(run_filter(x, T, control) == out);

    // Bounded step.
    const double bound = std::tan(pi / 2 - kHeadingMargin) * T;
    for (std::size_t i = 1; i < out.size(); ++i) {
      CHECK(std::abs(out[i] - out[i - 1]) <= bound);
    }

    // Mirror symmetry.
    std::vector<double> neg(x.size());
    std::transform(x.begin(), x.end(), neg.begin(), [](double v) { return -v; });
    const std::vector<double> mirrored = run_filter(neg, T, control);
    for (std::size_t i = 0; i < out.size(); ++i) {
      CHECK(std::abs(mirrored[i] + out[i]) < 1e-9 * std::max(1.0, std::abs(out[i])));
    }
  }
}
