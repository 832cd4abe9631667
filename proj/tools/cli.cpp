#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "csv.hpp"
#include "fuzzytrack/errors.hpp"
#include "fuzzytrack/fuzzy_inference.hpp"
#include "fuzzytrack/kalman.hpp"
#include "fuzzytrack/simulation.hpp"
#include "fuzzytrack/tracking_filter.hpp"

namespace fuzzytrack::cli {

namespace {

// Bad input data or out-of-domain values; maps to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InferOptions {
  double theta = 0.0;
  InferenceConfig cfg;
};

struct TrackOptions {
  std::string input;
  std::string output;
  double period = 1.0;
  bool kalman = false;
  KalmanParams kalman_params;
  InferenceConfig cfg;
};

struct CompareOptions {
  std::string trajectory = "exp-growth";
  std::size_t steps = 100;
  double noise_var = 0.25;
  std::uint64_t seed = 7;
  std::size_t runs = 30;
  std::size_t threads = 0;
  double period = 1.0;
  std::optional<double> c1;
  std::optional<double> c2;
  std::string output;
  KalmanParams kalman_params;
  InferenceConfig cfg;
};

void add_inference_flags(CLI::App& cmd, InferenceConfig& cfg) {
  cmd.add_option("--sigma", cfg.sigma, "Membership standard deviation")
      ->capture_default_str();
  cmd.add_option("--grid", cfg.grid_points, "Centroid quadrature nodes (odd)")
      ->capture_default_str();
}

void add_kalman_flags(CLI::App& cmd, KalmanParams& params) {
  cmd.add_option("--q", params.q, "Kalman process-noise variance")->capture_default_str();
  cmd.add_option("--r", params.r, "Kalman measurement-noise variance")
      ->capture_default_str();
}

// Writes the whole buffer or throws; nothing is created before this point.
void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw DataError("cannot open output file '" + path + "'");
  file << content;
  file.flush();
  if (!file) throw DataError("failed writing output file '" + path + "'");
}

int cmd_infer(const InferOptions& opt, std::ostream& out) {
  const double adjust = controller(opt.theta, opt.cfg);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", adjust == 0.0 ? 0.0 : adjust);
  std::string text(buf);
  if (text == "-0.000000000000") text.erase(0, 1);
  out << text << '\n';
  return kOk;
}

int cmd_track(const TrackOptions& opt) {
  std::ifstream in(opt.input, std::ios::binary);
  if (!in) throw DataError("cannot open input file '" + opt.input + "'");
  std::vector<Sample> samples;
  try {
    samples = read_samples(in);
  } catch (const CsvError& e) {
    throw DataError(opt.input + ": " + e.what());
  }

  std::vector<double> measured;
  measured.reserve(samples.size());
  for (const Sample& s : samples) measured.push_back(s.x);

  const std::vector<double> fuzzy = run_filter(measured, opt.period, opt.cfg);
  std::vector<double> kalman;
  if (opt.kalman) kalman = run_kalman(measured, opt.kalman_params);

  std::ostringstream csv;
  csv << "k,x_meas,x_fuzzy" << (opt.kalman ? ",x_kalman" : "") << '\n';
  for (std::size_t i = 0; i < samples.size(); ++i) {
    csv << samples[i].k << ',' << format_number(measured[i]) << ','
        << format_number(fuzzy[i]);
    if (opt.kalman) csv << ',' << format_number(kalman[i]);
    csv << '\n';
  }
  write_file(opt.output, csv.str());
  return kOk;
}

int cmd_compare(const CompareOptions& opt, std::ostream& out) {
  const auto family = parse_family(opt.trajectory);
  if (!family) throw DataError("unknown trajectory '" + opt.trajectory + "'");
  if (opt.runs < 1) throw DataError("--runs must be at least 1");

  TrajectorySpec spec = TrajectorySpec::defaults(*family);
  spec.steps = opt.steps;
  spec.period = opt.period;
  if (opt.c1) spec.c1 = *opt.c1;
  if (opt.c2) spec.c2 = *opt.c2;

  MonteCarloOptions mc;
  mc.runs = opt.runs;
  mc.base_seed = opt.seed;
  mc.threads = opt.threads;
  const MonteCarloSummary summary =
      monte_carlo(spec, opt.noise_var, mc, opt.cfg, opt.kalman_params);

  std::ostringstream csv;
  csv << "run,seed,C1,C2,winner\n";
  for (const RunResult& r : summary.runs) {
    csv << r.run_index << ',' << r.seed << ',' << format_number(r.c1) << ','
        << format_number(r.c2) << ',' << (r.fuzzy_wins() ? 1 : 0) << '\n';
  }
  write_file(opt.output, csv.str());
  out << "win_rate=" << format_number(summary.win_rate()) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy-logic target tracking filter with a Kalman baseline"};
  app.name(args.empty() ? "fuzzytrack" : args.front());
  app.require_subcommand(1);

  InferOptions infer;
  auto* infer_cmd = app.add_subcommand("infer", "Evaluate the fuzzy controller once");
  infer_cmd->add_option("--theta", infer.theta, "Angle difference in rad, within [-pi, pi]")
      ->required();
  add_inference_flags(*infer_cmd, infer.cfg);

  TrackOptions track;
  auto* track_cmd = app.add_subcommand("track", "Filter a k,x measurement CSV");
  track_cmd->add_option("--input", track.input, "Input CSV with header k,x")->required();
  track_cmd->add_option("--output", track.output, "Output CSV")->required();
  track_cmd->add_option("--period", track.period, "Sampling period")->required();
  track_cmd->add_flag("--kalman", track.kalman, "Add a Kalman baseline column");
  add_kalman_flags(*track_cmd, track.kalman_params);
  add_inference_flags(*track_cmd, track.cfg);

  CompareOptions compare;
  auto* compare_cmd =
      app.add_subcommand("compare", "Monte Carlo comparison of fuzzy and Kalman filters");
  compare_cmd->add_option("--trajectory", compare.trajectory, "exp-growth | exp-saturating")
      ->capture_default_str();
  compare_cmd->add_option("--steps", compare.steps, "Samples per run")->capture_default_str();
  compare_cmd->add_option("--noise-var", compare.noise_var, "Measurement noise variance (< 0.5)")
      ->capture_default_str();
  compare_cmd->add_option("--seed", compare.seed, "Base seed; run i uses seed + i")
      ->capture_default_str();
  compare_cmd->add_option("--runs", compare.runs, "Number of runs")->capture_default_str();
  compare_cmd->add_option("--period", compare.period, "Sampling period")->capture_default_str();
  compare_cmd->add_option("--c1", compare.c1, "Trajectory amplitude (family default)");
  compare_cmd->add_option("--c2", compare.c2, "Trajectory rate (family default)");
  compare_cmd->add_option("--threads", compare.threads, "Worker threads, 0 = all cores")
      ->capture_default_str();
  compare_cmd->add_option("--output", compare.output, "Per-run CSV")->required();
  add_kalman_flags(*compare_cmd, compare.kalman_params);
  add_inference_flags(*compare_cmd, compare.cfg);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("fuzzytrack");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*infer_cmd) return cmd_infer(infer, out);
    if (*track_cmd) return cmd_track(track);
    if (*compare_cmd) return cmd_compare(compare, out);
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kBadData;
  } catch (const fuzzytrack::Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadData;
  }
  return kUsage;
}

}  // namespace fuzzytrack::cli
