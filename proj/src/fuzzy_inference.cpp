#include "fuzzytrack/fuzzy_inference.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fuzzytrack/errors.hpp"

namespace fuzzytrack {

namespace {

constexpr std::array<std::string_view, kLabelCount> kNames = {
    "pvvb", "pvb", "pb", "pm", "ps", "pvs", "ze",
    "nvs",  "ns",  "nm", "nb", "nvb", "nvvb",
};

// Supports in units of a, in label order. The end sets are half as wide.
constexpr std::array<std::array<double, 2>, kLabelCount> kSupports = {{
    {5.0, 6.0},
    {4.0, 6.0},
    {3.0, 5.0},
    {2.0, 4.0},
    {1.0, 3.0},
    {0.0, 2.0},
    {-1.0, 1.0},
    {-2.0, 0.0},
    {-3.0, -1.0},
    {-4.0, -2.0},
    {-5.0, -3.0},
    {-6.0, -4.0},
    {-6.0, -5.0},
}};

// Admit values a few ulps past the universe edge, e.g. 6 * (pi / 6).
constexpr double kEdgeSlack = 1e-12;

void check_universe(double value, double limit, const char* what) {
  if (!(std::abs(value) <= limit * (1.0 + kEdgeSlack))) {
    throw DomainError(std::string(what) + " " + std::to_string(value) +
                      " is outside [-" + std::to_string(limit) + ", " +
                      std::to_string(limit) + "]");
  }
}

}  // namespace

std::string_view to_string(Label l) { return kNames[index_of(l)]; }

std::optional<Label> parse_label(std::string_view name) {
  for (Label l : kAllLabels) {
    if (kNames[index_of(l)] == name) return l;
  }
  return std::nullopt;
}

double half_width(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw InvalidParameter("sigma must be positive and finite");
  }
  return 2.0 * sigma * std::sqrt(2.0 * std::numbers::ln2);
}

Partition::Partition(double sigma) : sigma_(sigma), scale_(half_width(sigma)) {
  for (Label l : kAllLabels) {
    const auto [lo, hi] = kSupports[index_of(l)];
    sets_[index_of(l)] = FuzzySet{
        .label = l,
        .center = 0.5 * (lo + hi) * scale_,
        .support_lo = lo * scale_,
        .support_hi = hi * scale_,
        .sigma = sigma_,
    };
  }
}

double membership(const FuzzySet& set, double y) {
  const double d = y - set.center;
  return std::exp(-(d * d) / (2.0 * set.sigma * set.sigma));
}

MembershipVector fuzzify(double y, const Partition& partition) {
  MembershipVector out{};
  for (const FuzzySet& s : partition.sets()) out[index_of(s.label)] = membership(s, y);
  return out;
}

RuleBase::RuleBase() {
  for (Label l : kAllLabels) rules_[index_of(l)] = Rule{l, negate(l)};
}

void InferenceConfig::validate() const {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw InvalidParameter("sigma must be positive and finite");
  }
  if (!(gamma_in > 0.0) || !(gamma_out > 0.0)) {
    throw InvalidParameter("gamma_in and gamma_out must be positive");
  }
  if (grid_points < 3 || grid_points % 2 == 0) {
    throw InvalidParameter("grid_points must be odd and at least 3");
  }
}

double map_input(double theta, const InferenceConfig& cfg) {
  check_universe(theta, cfg.input_limit(), "theta");
  return theta / cfg.gamma_in * half_width(cfg.sigma);
}

double map_output(double theta_adj, const InferenceConfig& cfg) {
  check_universe(theta_adj, cfg.output_limit(), "theta_adj");
  return theta_adj / cfg.gamma_out * half_width(cfg.sigma);
}

double unmap_output(double y_o, const InferenceConfig& cfg) {
  const double a = half_width(cfg.sigma);
  check_universe(y_o, 6.0 * a, "y_o");
  return y_o / a * cfg.gamma_out;
}

double acl_membership(double theta, double theta_adj,
                      const InferenceConfig& cfg) {
  cfg.validate();
  const Partition partition(cfg.sigma);
  const MembershipVector in = fuzzify(map_input(theta, cfg), partition);
  const MembershipVector out = fuzzify(map_output(theta_adj, cfg), partition);
  const RuleBase rules;
  double acl = 0.0;
  for (const Rule& r : rules.rules()) {
    acl = std::max(acl, std::min(in[index_of(r.antecedent)],
                                 out[index_of(r.consequent)]));
  }
  return acl;
}

FuzzyController::FuzzyController(const InferenceConfig& cfg)
    : cfg_(cfg), partition_((cfg.validate(), cfg.sigma)) {
  // Nodes are integer multiples of the step so the grid is exactly symmetric.
  const std::size_t half = (cfg_.grid_points - 1) / 2;
  const double step = cfg_.output_limit() / static_cast<double>(half);
  grid_.resize(cfg_.grid_points);
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    grid_[i] = (static_cast<double>(i) - static_cast<double>(half)) * step;
  }
  const double a = partition_.scale();
  for (const FuzzySet& s : partition_.sets()) {
    auto& column = consequent_[index_of(s.label)];
    column.resize(grid_.size());
    for (std::size_t i = 0; i < grid_.size(); ++i) {
      column[i] = membership(s, grid_[i] / cfg_.gamma_out * a);
    }
  }
}

MembershipVector FuzzyController::fire(double theta) const {
  return fuzzify(map_input(theta, cfg_), partition_);
}

std::vector<double> FuzzyController::aggregate(double theta) const {
  const MembershipVector strength = fire(theta);
  std::vector<double> acl(grid_.size(), 0.0);
  for (const Rule& r : rules_.rules()) {
    const double w = strength[index_of(r.antecedent)];
    const auto& column = consequent_[index_of(r.consequent)];
    for (std::size_t i = 0; i < acl.size(); ++i) {
      acl[i] = std::max(acl[i], std::min(w, column[i]));
    }
  }
  return acl;
}

double FuzzyController::operator()(double theta) const {
  const std::vector<double> acl = aggregate(theta);
  const std::size_t last = acl.size() - 1;
  double num = 0.5 * (grid_[0] * acl[0] + grid_[last] * acl[last]);
  double den = 0.5 * (acl[0] + acl[last]);
  for (std::size_t i = 1; i < last; ++i) {
    num += grid_[i] * acl[i];
    den += acl[i];
  }
  const double step = grid_[1] - grid_[0];
  if (!(den * step >= 1e-300)) {
    throw DegenerateAggregate("aggregated fuzzy set has zero area for theta " +
                              std::to_string(theta));
  }
  return num / den;
}

double defuzzify_centroid(double theta, const InferenceConfig& cfg) {
  return FuzzyController(cfg)(theta);
}

double controller(double theta, const InferenceConfig& cfg) {
  return defuzzify_centroid(theta, cfg);
}

}  // namespace fuzzytrack
