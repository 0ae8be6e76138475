#include "geneo/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <ostream>

#include "geneo/bounds.hpp"
#include "geneo/io.hpp"
#include "geneo/matching.hpp"
#include "geneo/persistence.hpp"
#include "json.hpp"

namespace geneo {

DemoFunction parse_demo(const std::string& name) {
  if (name == "sine" || name == "sin") return DemoFunction::Sine;
  if (name == "quintic") return DemoFunction::Quintic;
  throw std::invalid_argument("unknown demo function '" + name + "' (expected sine or quintic)");
}

std::string demo_name(DemoFunction f) { return f == DemoFunction::Sine ? "sine" : "quintic"; }

double demo_lipschitz(DemoFunction f) { return f == DemoFunction::Sine ? 1.0 : 27.0 / 25.0; }

double demo_half_width(DemoFunction f) { return f == DemoFunction::Sine ? 4.0 * std::numbers::pi : 5.0; }

double demo_default_step(DemoFunction f) { return demo_half_width(f) / 4000.0; }

Signal demo_function(DemoFunction f, std::optional<double> step) {
  const double w = demo_half_width(f);
  const double h = step.value_or(demo_default_step(f));
  if (!(h > 0.0)) throw std::invalid_argument("demo_function: step must be positive");
  const auto intervals = static_cast<std::size_t>(std::max(1.0, std::round(2.0 * w / h)));
  const Grid grid = Grid::spanning(-w, w, intervals);
  if (f == DemoFunction::Sine) return Signal::sample(grid, [](double x) { return std::sin(x); });
  return Signal::sample(grid, [](double x) {
    return (x - 5.0) * (x - 3.0) * (x + 1.0) * (x + 4.0) * (x + 5.0) / 1000.0;
  });
}

Signal gen_lipschitz(Rng& rng, double L, int N, double ell, double step) {
  if (!(L > 0.0) || N < 0 || !(ell > 0.0) || !(step > 0.0))
    throw std::invalid_argument("gen_lipschitz: need L > 0, N >= 0, ell > 0, step > 0");
  std::vector<double> xs(static_cast<std::size_t>(N));
  for (double& x : xs) x = uniform_open(rng, 0.0, ell);
  std::sort(xs.begin(), xs.end());

  std::vector<double> kx{0.0}, ky{0.0};
  for (const double x : xs) {
    const double prev_y = ky.back();
    const double dx = x - kx.back();
    const double lo = std::max(prev_y - L * dx, -L * (ell - x));
    const double hi = std::min(prev_y + L * dx, L * (ell - x));
    const double y = hi > lo ? std::uniform_real_distribution<double>(lo, hi)(rng) : lo;
    kx.push_back(x);
    ky.push_back(y);
  }
  kx.push_back(ell);
  ky.push_back(0.0);

  const auto intervals = static_cast<std::size_t>(std::max(1.0, std::round(ell / step)));
  const Grid grid = Grid::spanning(0.0, ell, intervals);
  std::vector<double> values(grid.size);
  std::size_t seg = 0;
  for (std::size_t i = 0; i < grid.size; ++i) {
    const double x = std::min(grid.x(i), ell);
    while (seg + 2 < kx.size() && x > kx[seg + 1]) ++seg;
    const double dx = kx[seg + 1] - kx[seg];
    const double t = dx > 0.0 ? std::clamp((x - kx[seg]) / dx, 0.0, 1.0) : 0.0;
    values[i] = ky[seg] + t * (ky[seg + 1] - ky[seg]);
  }
  values.front() = 0.0;
  values.back() = 0.0;
  return Signal(grid, std::move(values));
}

Signal extend_to_cover(const Signal& s, double lo, double hi) {
  const double step = s.step();
  const auto left = static_cast<std::ptrdiff_t>(std::max(0.0, std::ceil((s.x_min() - lo) / step - 1e-9)));
  const auto right = static_cast<std::ptrdiff_t>(std::max(0.0, std::ceil((hi - s.x_max()) / step - 1e-9)));
  if (left == 0 && right == 0) return s;
  const auto n = static_cast<std::ptrdiff_t>(s.size());
  std::vector<double> values(static_cast<std::size_t>(n + left + right));
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(values.size()); ++i)
    values[static_cast<std::size_t>(i)] = s.at_index(i - left);
  return Signal(s.x_min() - static_cast<double>(left) * step, step, std::move(values), s.edge_policy());
}

TrialRecord run_trial(std::uint64_t seed, const TrialConfig& cfg) {
  Rng rng(seed);
  TrialRecord rec;
  rec.seed = seed;

  Signal clean = [&] {
    if (cfg.clean.kind == CleanSource::Kind::Demo) {
      rec.L = demo_lipschitz(cfg.clean.demo);
      return demo_function(cfg.clean.demo, cfg.step);
    }
    rec.L = cfg.clean.L;
    rec.N = uniform_int(rng, cfg.clean.n_min, cfg.clean.n_max);
    return gen_lipschitz(rng, cfg.clean.L, rec.N, cfg.clean.ell, cfg.step);
  }();

  rec.noise = sample_noise(rng, cfg.noise);
  const bool noisy = rec.noise.k() > 0;
  // Without bumps the filter still needs a radius; one grid step is the smallest.
  const double radius = noisy ? rec.noise.radius() : clean.step();

  if (noisy) {
    const auto [lo, hi] = std::minmax_element(rec.noise.bumps().begin(), rec.noise.bumps().end(),
                                              [](const Bump& l, const Bump& r) { return l.c < r.c; });
    clean = extend_to_cover(clean, lo->c - radius, hi->c + radius);
  }
  const Signal noise = render_noise(rec.noise, clean.grid(), clean.edge_policy());
  const Signal corrupted = combine(clean, noise, Combine::Add);
  const Signal filtered = denoise(corrupted, ShiftParams{2.0 * radius, radius});

  rec.raw_error = sup_dist(corrupted, clean);
  rec.denoised_error = sup_dist(filtered, clean);
  rec.det_bound = 3.0 * rec.L * radius;
  rec.in_family = rec.noise.eta() >= 8.0 * radius;
  rec.pd_distance = cfg.with_persistence
                        ? bottleneck(sublevel_pd0(clean), sublevel_pd0(filtered)).distance
                        : std::nan("");
  return rec;
}

std::vector<TrialRecord> run_trials(const TrialConfig& cfg, std::size_t count, std::uint64_t seed) {
  std::vector<TrialRecord> out(count);
  std::exception_ptr failure;
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = run_trial(derive_seed(seed, static_cast<std::uint64_t>(i)), cfg);
    } catch (...) {
#pragma omp critical(geneo_trial_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

TrialConfig preset_demo(DemoFunction f, double sigma, std::optional<double> step) {
  TrialConfig cfg;
  cfg.clean.kind = CleanSource::Kind::Demo;
  cfg.clean.demo = f;
  cfg.step = step.value_or(demo_default_step(f));
  const double ell = demo_half_width(f);
  cfg.noise.k_min = 1;
  cfg.noise.k_max = 10;
  cfg.noise.a = {-100.0, 100.0};
  cfg.noise.b = {0.0, 100.0};
  cfg.noise.c = {-ell, ell};
  cfg.noise.center_margin = 1.0;
  cfg.noise.sigma = sigma;
  cfg.noise.reject_below_gap_factor = 8.0;
  return cfg;
}

TrialConfig preset_sweep(double alpha, double beta, double L, double ell, double sigma,
                         std::optional<double> step, double b_max) {
  if (!(alpha > 0.0) || !(beta > 0.0) || !(L > 0.0) || !(b_max > beta))
    throw std::invalid_argument("preset_sweep: need alpha, beta, L > 0 and b_max > beta");
  TrialConfig cfg;
  cfg.clean.kind = CleanSource::Kind::RandomLipschitz;
  cfg.clean.L = L;
  cfg.clean.n_min = 1;
  cfg.clean.n_max = 10;
  cfg.clean.ell = ell;
  cfg.step = step.value_or(ell / 4000.0);
  cfg.noise.k_min = 1;
  cfg.noise.k_max = 10;
  cfg.noise.a = {0.0, alpha};
  cfg.noise.b = {beta, b_max};
  cfg.noise.c = {0.0, ell};
  cfg.noise.center_margin = 3.0;
  cfg.noise.margin_beta = beta;
  cfg.noise.sigma = sigma;
  cfg.with_persistence = false;
  return cfg;
}

Histogram run_histogram(const HistogramConfig& cfg) {
  Histogram h;
  if (cfg.trials == 0) return h;
  if (cfg.bins == 0) throw std::invalid_argument("run_histogram: need at least one bin");
  h.trials = run_trials(cfg.trial, cfg.trials, cfg.seed);
  for (const auto& t : h.trials) h.values.push_back(t.det_bound - t.denoised_error);

  const auto [lo_it, hi_it] = std::minmax_element(h.values.begin(), h.values.end());
  const double lo = *lo_it, hi = *hi_it;
  const double width = (hi - lo) / static_cast<double>(cfg.bins);
  for (std::size_t b = 0; b <= cfg.bins; ++b) h.edges.push_back(lo + width * static_cast<double>(b));
  h.edges.back() = hi;
  h.counts.assign(cfg.bins, 0);
  for (const double v : h.values) {
    std::size_t bin = 0;
    if (width > 0.0) bin = std::min(cfg.bins - 1, static_cast<std::size_t>((v - lo) / width));
    ++h.counts[bin];
  }
  return h;
}

SweepConfig SweepConfig::defaults() {
  SweepConfig cfg;
  for (int a = 50; a <= 100; a += 5) cfg.alpha_set.push_back(a);
  for (int b = 3; b <= 13; ++b) cfg.beta_set.push_back(b);
  for (int l = 1; l <= 10; ++l) cfg.L_set.push_back(l);
  return cfg;
}

SweepConfig SweepConfig::from_json(const std::string& text) {
  SweepConfig cfg = defaults();
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.contains("alpha_set")) cfg.alpha_set = j["alpha_set"].get<std::vector<double>>();
    if (j.contains("beta_set")) cfg.beta_set = j["beta_set"].get<std::vector<double>>();
    if (j.contains("L_set")) cfg.L_set = j["L_set"].get<std::vector<double>>();
    cfg.trials_per_cell = j.value("trials_per_cell", cfg.trials_per_cell);
    cfg.ell = j.value("ell", cfg.ell);
    cfg.sigma = j.value("sigma", cfg.sigma);
    cfg.step = j.value("step", cfg.step);
    cfg.seed = j.value("seed", cfg.seed);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("sweep config: ") + e.what());
  }
  return cfg;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  if (cfg.alpha_set.empty() || cfg.beta_set.empty() || cfg.L_set.empty() || cfg.trials_per_cell < 1)
    throw std::invalid_argument("run_sweep: empty parameter set or no trials");
  const std::size_t na = cfg.alpha_set.size(), nb = cfg.beta_set.size(), nl = cfg.L_set.size();
  const std::size_t per_cell = static_cast<std::size_t>(cfg.trials_per_cell);
  const std::size_t cells = na * nb * nl;

  struct Sample {
    double raw, denoised, bound;
  };
  std::vector<Sample> samples(cells * per_cell);
  std::exception_ptr failure;
  const auto total = static_cast<std::ptrdiff_t>(samples.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
    try {
      const auto u = static_cast<std::size_t>(idx);
      const std::size_t cell = u / per_cell;
      const double alpha = cfg.alpha_set[cell / (nb * nl)];
      const double beta = cfg.beta_set[(cell / nl) % nb];
      const double L = cfg.L_set[cell % nl];
      const TrialConfig tc = preset_sweep(alpha, beta, L, cfg.ell, cfg.sigma, cfg.step);
      const TrialRecord rec = run_trial(derive_seed(cfg.seed, u), tc);
      BoundInputs in;
      in.L = L;
      in.sigma = cfg.sigma;
      in.beta = beta;
      in.k = rec.noise.k();
      in.ell = cfg.ell;
      in.alpha_bar = alpha;
      samples[u] = {rec.raw_error, rec.denoised_error, expected_bound(in).value};
    } catch (...) {
#pragma omp critical(geneo_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  // Per-cell averages, then marginal means over the other two variables.
  std::vector<Sample> cell_mean(cells, Sample{0, 0, 0});
  for (std::size_t c = 0; c < cells; ++c) {
    for (std::size_t t = 0; t < per_cell; ++t) {
      const Sample& s = samples[c * per_cell + t];
      cell_mean[c].raw += s.raw;
      cell_mean[c].denoised += s.denoised;
      cell_mean[c].bound += s.bound;
    }
    cell_mean[c].raw /= static_cast<double>(per_cell);
    cell_mean[c].denoised /= static_cast<double>(per_cell);
    cell_mean[c].bound /= static_cast<double>(per_cell);
  }

  std::vector<SweepRow> rows;
  const auto marginal = [&](const std::string& var, const std::vector<double>& values, auto index_of) {
    for (std::size_t v = 0; v < values.size(); ++v) {
      SweepRow row{var, values[v], 0, 0, 0};
      std::size_t count = 0;
      for (std::size_t c = 0; c < cells; ++c) {
        if (index_of(c) != v) continue;
        row.mean_raw += cell_mean[c].raw;
        row.mean_denoised += cell_mean[c].denoised;
        row.mean_bound += cell_mean[c].bound;
        ++count;
      }
      row.mean_raw /= static_cast<double>(count);
      row.mean_denoised /= static_cast<double>(count);
      row.mean_bound /= static_cast<double>(count);
      rows.push_back(row);
    }
  };
  marginal("alpha", cfg.alpha_set, [&](std::size_t c) { return c / (nb * nl); });
  marginal("beta", cfg.beta_set, [&](std::size_t c) { return (c / nl) % nb; });
  marginal("L", cfg.L_set, [&](std::size_t c) { return c % nl; });
  return rows;
}

double BaselineComparison::best_convolution_error() const {
  return convolution_error.empty() ? kInfinity : *std::min_element(convolution_error.begin(), convolution_error.end());
}

BaselineComparison compare_baseline(const Signal& clean, const Signal& noisy, const ShiftParams& params,
                                    const std::vector<double>& h_values) {
  BaselineComparison out;
  for (const double h : h_values) {
    out.h.push_back(h);
    out.convolution_error.push_back(sup_dist(convolve_box(noisy, h), clean));
  }
  out.geneo_error = sup_dist(denoise(noisy, params), clean);
  return out;
}

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& trials) {
  using io::format_double;
  out << "seed,L,N,k,beta,eta,raw_error,denoised_error,det_bound,in_family,pd_distance\n";
  for (const TrialRecord& t : trials) {
    out << t.seed << ',' << format_double(t.L) << ',' << t.N << ',' << t.noise.k() << ','
        << format_double(t.noise.beta()) << ',' << format_double(t.noise.eta()) << ','
        << format_double(t.raw_error) << ',' << format_double(t.denoised_error) << ','
        << format_double(t.det_bound) << ',' << (t.in_family ? 1 : 0) << ',' << format_double(t.pd_distance)
        << '\n';
  }
}

void write_histogram_csv(std::ostream& out, const Histogram& h) {
  using io::format_double;
  out << "bin,lower,upper,count\n";
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    out << b << ',' << format_double(h.edges[b]) << ',' << format_double(h.edges[b + 1]) << ',' << h.counts[b]
        << '\n';
  }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  using io::format_double;
  out << "var,value,mean_raw,mean_denoised,mean_bound\n";
  for (const SweepRow& r : rows) {
    out << r.var << ',' << format_double(r.value) << ',' << format_double(r.mean_raw) << ','
        << format_double(r.mean_denoised) << ',' << format_double(r.mean_bound) << '\n';
  }
}

}  // namespace geneo
