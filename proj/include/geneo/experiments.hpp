#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "geneo/noise.hpp"
#include "geneo/operators.hpp"
#include "geneo/random.hpp"
#include "geneo/signal.hpp"

namespace geneo {

enum class DemoFunction { Sine, Quintic };

DemoFunction parse_demo(const std::string& name);
std::string demo_name(DemoFunction f);

/// Lipschitz constant of the demo function (1 for the sine, 27/25 for the quintic).
double demo_lipschitz(DemoFunction f);
/// Half-width of the interval [-ell, ell] supporting the demo and its noise.
double demo_half_width(DemoFunction f);
/// Default spacing: half-width / 4000.
double demo_default_step(DemoFunction f);

/// Sine on [-4 pi, 4 pi] or (1/1000)(x-5)(x-3)(x+1)(x+4)(x+5) on [-5, 5],
/// sampled on that interval (zero outside via the edge policy).
Signal demo_function(DemoFunction f, std::optional<double> step = std::nullopt);

/// Random L-Lipschitz function on [0, ell]: N sorted uniform knots, pinned
/// ends (0, 0) and (ell, 0), each knot value uniform in the range that still
/// admits an L-Lipschitz extension; the polyline is sampled on a grid with
/// spacing close to `step`.
Signal gen_lipschitz(Rng& rng, double L, int N, double ell, double step);

/// Returns `s` on a grid with the same spacing extended to cover [lo, hi];
/// new nodes take the edge-policy value.
Signal extend_to_cover(const Signal& s, double lo, double hi);

/// Clean-signal source for a trial.
struct CleanSource {
  enum class Kind { Demo, RandomLipschitz } kind = Kind::Demo;
  DemoFunction demo = DemoFunction::Sine;
  double L = 1.0;    ///< RandomLipschitz only
  int n_min = 1;     ///< RandomLipschitz knot-count law
  int n_max = 10;
  double ell = 20.0;  ///< RandomLipschitz domain [0, ell]
};

struct TrialConfig {
  CleanSource clean;
  NoiseSamplerConfig noise;
  double step = 0.005;
  bool with_persistence = true;
};

/// Outcome of one filtered trial.
struct TrialRecord {
  std::uint64_t seed = 0;
  double L = 0.0;
  int N = 0;  ///< knot count; 0 for demo functions
  NoiseSpec noise;
  double raw_error = 0.0;       ///< sup |phi_hat - phi|
  double denoised_error = 0.0;  ///< sup |F^{sigma/beta} F_{2 sigma/beta}(phi_hat) - phi|
  double det_bound = 0.0;       ///< 3 L sigma / beta
  bool in_family = false;       ///< eta >= 8 sigma / beta
  double pd_distance = 0.0;     ///< bottleneck distance of the two diagrams; NaN if not computed
};

/// Runs one trial from its own seed.
TrialRecord run_trial(std::uint64_t seed, const TrialConfig& cfg);

/// Runs `count` trials with seeds derive_seed(seed, i), in parallel, returning
/// records in index order.
std::vector<TrialRecord> run_trials(const TrialConfig& cfg, std::size_t count, std::uint64_t seed);

/// Demo trials with the wide noise law: k ~ U{1..10}, a ~ U(-100, 100),
/// b ~ U(0, 100), centers in (-ell + sigma/beta, ell - sigma/beta), redrawn
/// until eta > 8 sigma/beta.
TrialConfig preset_demo(DemoFunction f, double sigma = kDefaultSigma, std::optional<double> step = std::nullopt);

/// Random-Lipschitz trials with the sweep noise law: N, k ~ U{1..10},
/// a ~ U(0, alpha), b ~ U(beta, b_max), centers in (3 sigma/beta, ell - 3 sigma/beta).
TrialConfig preset_sweep(double alpha, double beta, double L, double ell = 20.0, double sigma = kDefaultSigma,
                         std::optional<double> step = std::nullopt, double b_max = 20.0);

struct Histogram {
  std::vector<double> edges;         ///< bins + 1 edges, empty without trials
  std::vector<std::size_t> counts;   ///< per bin
  std::vector<double> values;        ///< one overestimation per trial
  std::vector<TrialRecord> trials;
};

struct HistogramConfig {
  TrialConfig trial = preset_demo(DemoFunction::Sine);
  std::size_t trials = 1000;
  std::size_t bins = 10;
  std::uint64_t seed = 1;
};

/// Overestimation det_bound - denoised_error per trial, binned over its range.
Histogram run_histogram(const HistogramConfig& cfg);

struct SweepConfig {
  std::vector<double> alpha_set;
  std::vector<double> beta_set;
  std::vector<double> L_set;
  int trials_per_cell = 100;
  double ell = 20.0;
  double sigma = kDefaultSigma;
  double step = 0.005;
  std::uint64_t seed = 1;

  /// alpha in {50, 55, .., 100}, beta in {3, .., 13}, L in {1, .., 10}.
  static SweepConfig defaults();
  static SweepConfig from_json(const std::string& text);
};

struct SweepRow {
  std::string var;
  double value = 0.0;
  double mean_raw = 0.0;
  double mean_denoised = 0.0;
  double mean_bound = 0.0;
};

/// For each value of each swept variable, the mean over the other two of the
/// per-cell averages.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

/// Errors of the box-kernel baseline for each h, next to the filter's error.
struct BaselineComparison {
  std::vector<double> h;
  std::vector<double> convolution_error;
  double geneo_error = 0.0;
  [[nodiscard]] double best_convolution_error() const;
};

BaselineComparison compare_baseline(const Signal& clean, const Signal& noisy, const ShiftParams& params,
                                    const std::vector<double>& h_values);

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& trials);
void write_histogram_csv(std::ostream& out, const Histogram& h);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace geneo
