#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "geneo/bounds.hpp"
#include "geneo/experiments.hpp"

using namespace geneo;

TEST_CASE("demo functions") {
  const Signal sine = demo_function(DemoFunction::Sine);
  CHECK(eval(sine, std::numbers::pi / 2) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(sine.x_min() == doctest::Approx(-4 * std::numbers::pi));
  CHECK(sine.x_max() == doctest::Approx(4 * std::numbers::pi));
  CHECK(eval(sine, 20.0) == 0.0);
  const Signal q = demo_function(DemoFunction::Quintic);
  CHECK(eval(q, 3.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
  CHECK(measure_lipschitz(q) <= 27.0 / 25.0 + 1e-2);
  CHECK(q.step() == doctest::Approx(10.0 / 8000.0));
  CHECK(parse_demo("sin") == DemoFunction::Sine);
  CHECK_THROWS_AS(parse_demo("cosine"), std::invalid_argument);
}

TEST_CASE("gen_lipschitz") {
  SUBCASE("no knots gives the zero signal") {
    Rng rng(1);
    const Signal s = gen_lipschitz(rng, 3.0, 0, 20.0, 0.005);
    for (double v : s.values()) CHECK(v == 0.0);
  }
  SUBCASE("Lipschitz and pinned for many seeds") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      Rng rng(seed);
      const double L = 1.0 + static_cast<double>(seed % 10);
      const Signal s = gen_lipschitz(rng, L, 1 + static_cast<int>(seed % 10), 20.0, 0.005);
      CHECK(measure_lipschitz(s) <= L * (1.0 + 1e-9));
      CHECK(s[0] == 0.0);
      CHECK(s[s.size() - 1] == 0.0);
      CHECK(s.x_max() == doctest::Approx(20.0));
    }
  }
}

TEST_CASE("extend_to_cover keeps the grid and pads with the edge value") {
  const Signal s(0.0, 0.5, {1.0, 2.0, 3.0});
  const Signal e = extend_to_cover(s, -1.2, 1.6);
  CHECK(e.step() == 0.5);
  CHECK(e.x_min() <= -1.2);
  CHECK(e.x_max() >= 1.6);
  CHECK(eval(e, 0.5) == 2.0);
  CHECK(eval(e, -1.0) == 0.0);
}

TEST_CASE("run_trial") {
  SUBCASE("zero noise") {
    TrialConfig cfg = preset_demo(DemoFunction::Sine);
    cfg.noise.k_min = cfg.noise.k_max = 0;
    const TrialRecord r = run_trial(5, cfg);
    CHECK(r.raw_error == 0.0);
    CHECK(r.denoised_error <= 3.0 * r.L * cfg.step);
  }
  SUBCASE("in-family trials respect the bounds") {
    const TrialConfig cfg = preset_demo(DemoFunction::Quintic);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const TrialRecord r = run_trial(seed, cfg);
      REQUIRE(r.in_family);
      CHECK(r.denoised_error <= r.det_bound + r.L * cfg.step);
      CHECK(r.pd_distance <= r.denoised_error + 1e-9);
      CHECK(r.raw_error >= 0.0);
      CHECK(r.det_bound == doctest::Approx(corollary_bound(r.L, 1.1, r.noise.beta())));
    }
  }
  SUBCASE("random Lipschitz source") {
    TrialConfig cfg = preset_sweep(80.0, 5.0, 2.0);
    cfg.with_persistence = true;
    const TrialRecord r = run_trial(3, cfg);
    CHECK(r.L == 2.0);
    CHECK(r.N >= 1);
    CHECK(r.N <= 10);
    CHECK(r.noise.beta() > 5.0);
    CHECK(r.pd_distance <= r.denoised_error + 1e-9);
  }
  SUBCASE("sweep preset skips persistence") {
    CHECK(std::isnan(run_trial(3, preset_sweep(80.0, 5.0, 2.0)).pd_distance));
  }
}

TEST_CASE("run_trials is index-ordered and reproducible") {
  const TrialConfig cfg = preset_demo(DemoFunction::Quintic);
  const auto a = run_trials(cfg, 12, 9);
  const auto b = run_trials(cfg, 12, 9);
  REQUIRE(a.size() == 12);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].seed == derive_seed(9, i));
    CHECK(a[i].denoised_error == b[i].denoised_error);
    CHECK(a[i].noise == run_trial(derive_seed(9, i), cfg).noise);
  }
}

TEST_CASE("histogram") {
  SUBCASE("no trials") {
    HistogramConfig cfg;
    cfg.trials = 0;
    const Histogram h = run_histogram(cfg);
    CHECK(h.counts.empty());
    CHECK(h.edges.empty());
    std::ostringstream out;
    write_histogram_csv(out, h);
    CHECK(out.str() == "bin,lower,upper,count\n");
  }
  SUBCASE("counts add up") {
    HistogramConfig cfg;
    cfg.trial = preset_demo(DemoFunction::Quintic);
    cfg.trials = 40;
    cfg.bins = 5;
    const Histogram h = run_histogram(cfg);
    std::size_t total = 0;
    for (auto c : h.counts) total += c;
    CHECK(total == 40);
    CHECK(h.edges.size() == 6);
    for (double v : h.values) CHECK(v >= -h.trials[0].L * cfg.trial.step);
  }
}

TEST_CASE("sweep at desk scale") {
  SweepConfig cfg = SweepConfig::defaults();
  CHECK(cfg.alpha_set.size() == 11);
  CHECK(cfg.beta_set.size() == 11);
  CHECK(cfg.L_set.size() == 10);
  cfg.alpha_set = {50, 100};
  cfg.beta_set = {3, 13};
  cfg.L_set = {1, 10};
  cfg.trials_per_cell = 10;
  cfg.step = 0.01;
  const auto rows = run_sweep(cfg);
  REQUIRE(rows.size() == 6);
  for (const SweepRow& r : rows) {
    CHECK(r.mean_denoised < r.mean_raw);
    // The marginal mixes L values; slack uses the largest.
    CHECK(r.mean_denoised <= r.mean_bound + 10.0 * cfg.step);
  }
  CHECK(rows[0].var == "alpha");
  CHECK(rows[2].var == "beta");
  CHECK(rows[4].var == "L");
  std::ostringstream a, b;
  write_sweep_csv(a, rows);
  write_sweep_csv(b, run_sweep(cfg));
  CHECK(a.str() == b.str());
}

TEST_CASE("sweep config from json") {
  const SweepConfig cfg = SweepConfig::from_json(R"({"alpha_set": [60], "trials_per_cell": 3, "seed": 5})");
  CHECK(cfg.alpha_set == std::vector<double>{60});
  CHECK(cfg.beta_set.size() == 11);
  CHECK(cfg.trials_per_cell == 3);
  CHECK(cfg.seed == 5);
  CHECK_THROWS_AS(SweepConfig::from_json("{"), std::invalid_argument);
}

TEST_CASE("trials csv") {
  const auto trials = run_trials(preset_demo(DemoFunction::Quintic), 2, 1);
  std::ostringstream out;
  write_trials_csv(out, trials);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "seed,L,N,k,beta,eta,raw_error,denoised_error,det_bound,in_family,pd_distance");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 2);
}
