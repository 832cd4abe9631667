#pragma once

// Single-input single-output Mamdani controller used by the tracking filter.
//
// Input:  angle difference theta in [-pi, pi] rad.
// Output: crisp angle adjustment in [-pi/3, pi/3] rad.
//
// Both variables are mapped linearly onto the normalized universe [-6a, 6a],
// partitioned into 13 Gaussian sets of standard deviation sigma, where
// a = 2 sigma sqrt(2 ln 2) is the Gaussian FWHM. Rules negate the label
// (pvs -> nvs, ze -> ze, ...), use min implication and max aggregation, and
// the aggregate is defuzzified by its centroid (trapezoidal quadrature).

#include <array>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

namespace fuzzytrack {

/// Linguistic labels, in descending order of their set centers.
enum class Label : std::uint8_t {
  pvvb,
  pvb,
  pb,
  pm,
  ps,
  pvs,
  ze,
  nvs,
  ns,
  nm,
  nb,
  nvb,
  nvvb,
};

inline constexpr std::size_t kLabelCount = 13;

inline constexpr std::array<Label, kLabelCount> kAllLabels = {
    Label::pvvb, Label::pvb, Label::pb,  Label::pm,  Label::ps,
    Label::pvs,  Label::ze,  Label::nvs, Label::ns,  Label::nm,
    Label::nb,   Label::nvb, Label::nvvb,
};

constexpr std::size_t index_of(Label l) { return static_cast<std::size_t>(l); }

/// Sign negation: pvvb <-> nvvb, ..., ze <-> ze.
constexpr Label negate(Label l) {
  return static_cast<Label>(kLabelCount - 1 - index_of(l));
}

std::string_view to_string(Label l);
std::optional<Label> parse_label(std::string_view name);

/// One bell-shaped set. Center and support are in normalized units.
struct FuzzySet {
  Label label;
  double center;
  double support_lo;
  double support_hi;
  double sigma;
};

/// Membership degree of each label, indexed by index_of(label).
using MembershipVector = std::array<double, kLabelCount>;

/// FWHM of a Gaussian with standard deviation sigma: 2 sigma sqrt(2 ln 2).
/// Throws InvalidParameter unless sigma > 0.
double half_width(double sigma);

/// The 13-set partition of [-6a, 6a].
class Partition {
 public:
  explicit Partition(double sigma);

  double sigma() const { return sigma_; }
  /// Normalized scale a.
  double scale() const { return scale_; }
  double lower_bound() const { return -6.0 * scale_; }
  double upper_bound() const { return 6.0 * scale_; }

  const std::array<FuzzySet, kLabelCount>& sets() const { return sets_; }
  const FuzzySet& set(Label l) const { return sets_[index_of(l)]; }

 private:
  double sigma_;
  double scale_;
  std::array<FuzzySet, kLabelCount> sets_{};
};

/// Gaussian membership, untruncated: exp(-(y - center)^2 / (2 sigma^2)).
double membership(const FuzzySet& set, double y);

/// The FZ operator: memberships of y in every set of the partition.
MembershipVector fuzzify(double y, const Partition& partition);

struct Rule {
  Label antecedent;
  Label consequent;
};

/// Thirteen rules, each mapping a label to its negation.
class RuleBase {
 public:
  RuleBase();

  const std::array<Rule, kLabelCount>& rules() const { return rules_; }
  Label consequent_of(Label antecedent) const {
    return rules_[index_of(antecedent)].consequent;
  }

 private:
  std::array<Rule, kLabelCount> rules_{};
};

struct InferenceConfig {
  double sigma = 1.0;
  /// Input angle mapped to one partition step a (30 degrees).
  double gamma_in = std::numbers::pi / 6.0;
  /// Output angle mapped to one partition step a (10 degrees).
  double gamma_out = std::numbers::pi / 18.0;
  /// Trapezoidal nodes on the output universe; odd so 0 is a node.
  std::size_t grid_points = 1201;

  /// Throws InvalidParameter on sigma <= 0, gamma <= 0, or even/too small N.
  void validate() const;

  double input_limit() const { return 6.0 * gamma_in; }
  double output_limit() const { return 6.0 * gamma_out; }
};

/// theta (rad, within +-6 gamma_in) -> normalized units.
double map_input(double theta, const InferenceConfig& cfg);
/// theta_adj (rad, within +-6 gamma_out) -> normalized units.
double map_output(double theta_adj, const InferenceConfig& cfg);
/// Inverse of map_output.
double unmap_output(double y_o, const InferenceConfig& cfg);

/// Aggregated membership mu_ACL(theta, theta_adj) = max_r min(mu_in, mu_out).
double acl_membership(double theta, double theta_adj,
                      const InferenceConfig& cfg);

/// Precomputes the output grid and consequent memberships for repeated
/// evaluation. Immutable after construction.
class FuzzyController {
 public:
  explicit FuzzyController(const InferenceConfig& cfg = {});

  const InferenceConfig& config() const { return cfg_; }
  const Partition& partition() const { return partition_; }
  const RuleBase& rules() const { return rules_; }
  const std::vector<double>& grid() const { return grid_; }

  /// Firing strength of each rule's antecedent for theta.
  MembershipVector fire(double theta) const;

  /// Aggregated membership sampled on grid().
  std::vector<double> aggregate(double theta) const;

  /// Centroid of the aggregate, in rad.
  double operator()(double theta) const;

 private:
  InferenceConfig cfg_;
  Partition partition_;
  RuleBase rules_;
  std::vector<double> grid_;
  // consequent_[label][i]: membership of grid_[i] in the set of label.
  std::array<std::vector<double>, kLabelCount> consequent_;
};

/// Centroid defuzzification of mu_ACL(theta, .) on cfg.grid_points nodes.
double defuzzify_centroid(double theta, const InferenceConfig& cfg);

/// Crisp adjustment for theta; same contract as defuzzify_centroid.
double controller(double theta, const InferenceConfig& cfg = {});

}  // namespace fuzzytrack
