#include "geneo/cli.hpp"

#include <omp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "geneo/bounds.hpp"
#include "geneo/experiments.hpp"
#include "geneo/io.hpp"
#include "geneo/matching.hpp"
#include "geneo/noise.hpp"
#include "geneo/operators.hpp"
#include "geneo/persistence.hpp"

namespace geneo {
namespace {

// Bad user input; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GlobalOptions {
  std::uint64_t seed = 1;
  std::optional<double> step;
  double sigma = kDefaultSigma;
  std::string out;
  int threads = 0;
};

struct SignalSource {
  std::string input;
  std::string demo;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Resolves the output stream: --out, else $GENEO_OUT_DIR/<name>, else `fallback`.
class Output {
 public:
  Output(const std::string& path, const std::string& default_name, std::ostream& fallback) : stream_(&fallback) {
    std::string target = path;
    if (target.empty()) {
      if (const char* dir = std::getenv("GENEO_OUT_DIR"); dir != nullptr && *dir != '\0') {
        std::filesystem::create_directories(dir);
        target = (std::filesystem::path(dir) / default_name).string();
      }
    }
    if (!target.empty()) {
      file_.open(target);
      if (!file_) throw UsageError("cannot write '" + target + "'");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void add_source_options(CLI::App* cmd, SignalSource& src) {
  auto* input = cmd->add_option("-i,--input", src.input, "signal CSV (x,value)");
  auto* demo = cmd->add_option("--demo", src.demo, "built-in signal: sine | quintic");
  input->excludes(demo);
}

Signal load_source(const SignalSource& src, const GlobalOptions& g) {
  if (!src.input.empty()) {
    std::ifstream in(src.input);
    if (!in) throw UsageError("cannot open '" + src.input + "'");
    return io::read_signal_csv(in);
  }
  if (!src.demo.empty()) return demo_function(parse_demo(src.demo), g.step);
  throw UsageError("one of --input or --demo is required");
}

void warn_snap(std::ostream& err, const char* name, double radius, double snapped, double step) {
  if (std::abs(snapped - radius) > 0.5 * step) {
    err << "warning: " << name << " = " << io::format_double(radius) << " snapped to "
        << io::format_double(snapped) << " (grid step " << io::format_double(step) << ")\n";
  }
}

int cmd_denoise(const GlobalOptions& g, const SignalSource& src, const std::string& noise_path, bool clean_only,
                std::optional<double> epsilon, std::optional<double> delta, std::optional<double> beta,
                std::optional<int> tau_n, const std::string& svg_path, std::ostream& out, std::ostream& err) {
  if (epsilon.has_value() != delta.has_value()) throw UsageError("--epsilon and --delta must be given together");
  Signal clean = load_source(src, g);

  std::optional<NoiseSpec> noise;
  if (!noise_path.empty()) {
    noise = io::noise_from_json(read_file(noise_path));
  } else if (!src.demo.empty() && !clean_only) {
    TrialConfig preset = preset_demo(parse_demo(src.demo), g.sigma, g.step);
    Rng rng(g.seed);
    noise = sample_noise(rng, preset.noise);
  }

  Signal corrupted = clean;
  if (noise && noise->k() > 0) {
    const double r = noise->radius();
    const auto [lo, hi] = std::minmax_element(noise->bumps().begin(), noise->bumps().end(),
                                              [](const Bump& l, const Bump& rr) { return l.c < rr.c; });
    clean = extend_to_cover(clean, lo->c - r, hi->c + r);
    corrupted = combine(clean, render_noise(*noise, clean.grid(), clean.edge_policy()), Combine::Add);
  }

  ShiftParams params;
  if (epsilon) {
    params = {*epsilon, *delta};
  } else {
    const double b = beta ? *beta : (noise && noise->k() > 0 ? noise->beta() : 0.0);
    if (!(b > 0.0) || !std::isfinite(b))
      throw UsageError("automatic radii need --beta or a noise spec with at least one bump");
    const double sigma = noise ? noise->sigma() : g.sigma;
    if (tau_n) {
      const double theta = noise ? noise->eta() : kInfinity;
      if (!std::isfinite(theta)) throw UsageError("--tau-n needs a noise spec with at least two bumps");
      const double tau = tau_schedule(*tau_n, sigma, b, theta);
      params = {tau, tau / 2.0};
    } else {
      params = ShiftParams::for_noise(sigma, b);
    }
  }
  if (!(params.epsilon > 0.0) || !(params.delta > 0.0)) throw UsageError("epsilon and delta must be positive");
  const SnappedParams snapped = snap_params(params, corrupted.step());
  warn_snap(err, "epsilon", params.epsilon, snapped.epsilon, corrupted.step());
  warn_snap(err, "delta", params.delta, snapped.delta, corrupted.step());

  const Signal filtered = denoise(corrupted, params);
  {
    Output dst(g.out, "denoised.csv", out);
    io::write_signal_csv(dst.stream(), filtered);
  }
  err << "epsilon=" << io::format_double(snapped.epsilon) << " delta=" << io::format_double(snapped.delta)
      << " (grid-snapped)\n";
  if (noise) {
    err << "noise: k=" << noise->k() << " beta=" << io::format_double(noise->beta())
        << " eta=" << io::format_double(noise->eta()) << '\n';
    err << "raw_error=" << io::format_double(sup_dist(corrupted, clean))
        << " denoised_error=" << io::format_double(sup_dist(filtered, clean)) << '\n';
  }
  if (!svg_path.empty()) {
    std::ofstream svg(svg_path);
    if (!svg) throw UsageError("cannot write '" + svg_path + "'");
    std::vector<io::PlotSeries> series{{"input", &corrupted, "#e0a000"}, {"filtered", &filtered, "#1f5fbf"}};
    if (noise) series.push_back({"clean", &clean, "#2a2a2a"});
    io::write_svg(svg, series, "min/max shift filter");
  }
  return 0;
}

int cmd_pd(const GlobalOptions& g, const SignalSource& src, std::ostream& out) {
  const Diagram d = sublevel_pd0(load_source(src, g));
  Output dst(g.out, "diagram.csv", out);
  io::write_diagram_csv(dst.stream(), d);
  return 0;
}

int cmd_bottleneck(const GlobalOptions& g, const std::vector<std::string>& files, bool witness, std::ostream& out) {
  if (files.size() != 2) throw UsageError("bottleneck needs exactly two diagram CSV files");
  std::ifstream fa(files[0]), fb(files[1]);
  if (!fa) throw UsageError("cannot open '" + files[0] + "'");
  if (!fb) throw UsageError("cannot open '" + files[1] + "'");
  const Diagram a = io::read_diagram_csv(fa);
  const Diagram b = io::read_diagram_csv(fb);
  const MatchResult m = bottleneck(a, b);
  Output dst(g.out, "bottleneck.csv", out);
  if (witness) {
    io::write_witness_csv(dst.stream(), a, b, m);
  } else {
    dst.stream() << io::format_double(m.distance) << '\n';
  }
  return 0;
}

int cmd_convolve(const GlobalOptions& g, const SignalSource& src, double h, std::ostream& out) {
  if (!(h > 0.0)) throw UsageError("--h must be positive");
  const Signal result = convolve_box(load_source(src, g), h);
  Output dst(g.out, "convolved.csv", out);
  io::write_signal_csv(dst.stream(), result);
  return 0;
}

void print_report(std::ostream& out, const char* name, const BoundReport& r) {
  out << name << ',' << io::format_double(r.value) << ',' << (r.valid ? "valid" : "invalid") << ',';
  for (std::size_t i = 0; i < r.violated_conditions.size(); ++i) {
    out << (i ? "; " : "") << r.violated_conditions[i];
  }
  out << '\n';
}

int cmd_bounds(const GlobalOptions& g, BoundInputs in, bool have_det, bool have_expected, std::ostream& out) {
  in.sigma = g.sigma;
  Output dst(g.out, "bounds.csv", out);
  auto& os = dst.stream();
  os << "bound,value,validity,violated\n";
  os << "corollary," << io::format_double(corollary_bound(in.L, in.sigma, in.beta)) << ",valid,\n";
  if (have_det) print_report(os, "deterministic", deterministic_bound(in));
  if (have_expected) {
    print_report(os, "expected", expected_bound(in));
    print_report(os, "matching_expected", matching_expected_bound(in));
  }
  return 0;
}

int cmd_simulate(const GlobalOptions& g, const std::string& demo, std::size_t trials, std::size_t bins,
                 const std::string& trials_csv, std::ostream& out, std::ostream& err) {
  HistogramConfig cfg;
  cfg.trial = preset_demo(parse_demo(demo), g.sigma, g.step);
  cfg.trials = trials;
  cfg.bins = bins;
  cfg.seed = g.seed;
  if (bins == 0) throw UsageError("--bins must be positive");
  const Histogram h = run_histogram(cfg);
  {
    Output dst(g.out, "histogram.csv", out);
    write_histogram_csv(dst.stream(), h);
  }
  if (!trials_csv.empty()) {
    std::ofstream f(trials_csv);
    if (!f) throw UsageError("cannot write '" + trials_csv + "'");
    write_trials_csv(f, h.trials);
  }
  std::size_t violations = 0;
  for (const auto& t : h.trials) {
    if (t.in_family && t.denoised_error > t.det_bound + t.L * cfg.trial.step) ++violations;
  }
  err << "trials=" << h.trials.size() << " bound_violations=" << violations << '\n';
  return 0;
}

int cmd_sweep(const GlobalOptions& g, const std::string& config_path, std::optional<int> per_cell,
              bool seed_given, std::ostream& out) {
  SweepConfig cfg = config_path.empty() ? SweepConfig::defaults() : SweepConfig::from_json(read_file(config_path));
  if (per_cell) cfg.trials_per_cell = *per_cell;
  if (g.step) cfg.step = *g.step;
  if (seed_given || config_path.empty()) cfg.seed = g.seed;
  cfg.sigma = config_path.empty() ? g.sigma : cfg.sigma;
  const auto rows = run_sweep(cfg);
  Output dst(g.out, "sweep.csv", out);
  write_sweep_csv(dst.stream(), rows);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Impulsive-noise removal with min/max shift operators, degree-0 persistence and bounds", "geneo"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  auto* seed_opt = app.add_option("--seed", g.seed, "seed for every random draw");
  app.add_option("--step", g.step, "grid spacing for generated signals")->check(CLI::PositiveNumber);
  app.add_option("--sigma", g.sigma, "support radius of the mother bump")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "output file (default: stdout or $GENEO_OUT_DIR)");
  app.add_option("--threads", g.threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);

  SignalSource src;

  auto* denoise_cmd = app.add_subcommand("denoise", "apply F^delta o F_epsilon to a signal");
  add_source_options(denoise_cmd, src);
  std::string noise_path, svg_path;
  bool clean_only = false;
  std::optional<double> epsilon, delta, beta;
  std::optional<int> tau_n;
  denoise_cmd->add_option("--noise", noise_path, "noise spec JSON to add to the signal");
  denoise_cmd->add_flag("--clean", clean_only, "do not add sampled noise to a demo signal");
  denoise_cmd->add_option("--epsilon", epsilon, "inner min-shift radius");
  denoise_cmd->add_option("--delta", delta, "outer max-shift radius");
  denoise_cmd->add_option("--beta", beta, "thinness for automatic radii (2 sigma/beta, sigma/beta)");
  denoise_cmd->add_option("--tau-n", tau_n, "use epsilon = tau_n, delta = tau_n / 2 with theta = eta")
      ->check(CLI::PositiveNumber);
  denoise_cmd->add_option("--svg", svg_path, "write an SVG overlay plot");

  auto* pd_cmd = app.add_subcommand("pd", "degree-0 sublevel persistence diagram");
  add_source_options(pd_cmd, src);

  auto* bn_cmd = app.add_subcommand("bottleneck", "bottleneck distance between two diagram CSVs");
  std::vector<std::string> diagram_files;
  bool witness = false;
  bn_cmd->add_option("diagrams", diagram_files, "two diagram CSV files")->expected(2);
  bn_cmd->add_flag("--witness", witness, "print the optimal pairing instead of the distance");

  auto* conv_cmd = app.add_subcommand("convolve", "box-kernel convolution baseline");
  add_source_options(conv_cmd, src);
  double h = 0.0;
  conv_cmd->set_help_flag("--help", "print this help message and exit");
  conv_cmd->add_option("--h", h, "kernel parameter: T_h = h/2 on [-1/h, 1/h]")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate the error bounds");
  BoundInputs bin;
  bounds_cmd->add_option("--L", bin.L, "Lipschitz constant");
  bounds_cmd->add_option("--beta", bin.beta, "minimum squeeze factor")->required();
  auto* theta_opt = bounds_cmd->add_option("--theta", bin.theta, "guaranteed center separation");
  auto* eps_opt = bounds_cmd->add_option("--epsilon", bin.epsilon, "inner radius");
  auto* delta_opt = bounds_cmd->add_option("--delta", bin.delta, "outer radius");
  auto* k_opt = bounds_cmd->add_option("--k", bin.k, "number of bumps");
  auto* ell_opt = bounds_cmd->add_option("--ell", bin.ell, "length of the center interval");
  bounds_cmd->add_option("--alpha-bar", bin.alpha_bar, "largest bump height");

  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo histogram of the bound's overestimation");
  std::string sim_demo = "sine", trials_csv;
  std::size_t trials = 1000, bins = 10;
  sim_cmd->add_option("--demo", sim_demo, "sine | quintic");
  sim_cmd->add_option("--trials", trials, "number of trials");
  sim_cmd->add_option("--bins", bins, "histogram bins");
  sim_cmd->add_option("--trials-csv", trials_csv, "also write per-trial records here");

  auto* sweep_cmd = app.add_subcommand("sweep", "parameter sweep over (alpha, beta, L)");
  std::string config_path;
  std::optional<int> per_cell;
  sweep_cmd->add_option("--config", config_path, "JSON sweep configuration");
  sweep_cmd->add_option("--trials-per-cell", per_cell, "trials per (alpha, beta, L) cell")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  if (g.threads > 0) omp_set_num_threads(g.threads);

  try {
    if (*denoise_cmd)
      return cmd_denoise(g, src, noise_path, clean_only, epsilon, delta, beta, tau_n, svg_path, out, err);
    if (*pd_cmd) return cmd_pd(g, src, out);
    if (*bn_cmd) return cmd_bottleneck(g, diagram_files, witness, out);
    if (*conv_cmd) return cmd_convolve(g, src, h, out);
    if (*bounds_cmd) {
      const bool have_det = *theta_opt && *eps_opt && *delta_opt;
      const bool have_expected = *k_opt && *ell_opt;
      if (!have_det && !have_expected)
        throw UsageError("bounds needs --theta/--epsilon/--delta and/or --k/--ell");
      return cmd_bounds(g, bin, have_det, have_expected, out);
    }
    if (*sim_cmd) return cmd_simulate(g, sim_demo, trials, bins, trials_csv, out, err);
    if (*sweep_cmd) return cmd_sweep(g, config_path, per_cell, seed_opt->count() > 0, out);
  } catch (const InfeasibleConfig& e) {
    err << "infeasible: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const io::FormatError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace geneo
