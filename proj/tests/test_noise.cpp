#include <cmath>
#include <random>

#include "doctest.h"
#include "geneo/noise.hpp"
#include "geneo/operators.hpp"
#include "support.hpp"

using namespace geneo;

TEST_CASE("mother bump values") {
  CHECK(mother_bump(0.0) == 1.0);
  CHECK(mother_bump(1.5) == 0.0);
  CHECK(mother_bump(-1.5) == 0.0);
  CHECK(mother_bump(0.5) == doctest::Approx(std::exp(-1.0 / 3.0)));
  CHECK(mother_bump(0.5) == doctest::Approx(0.7165).epsilon(1e-4));
  for (int i = -300; i <= 300; ++i) {
    const double v = mother_bump(i / 100.0);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    if (std::abs(i) >= 110) CHECK(v == 0.0);
  }
}

TEST_CASE("bump shapes are validated") {
  CHECK_NOTHROW(BumpShape::standard());
  CHECK_THROWS_AS(BumpShape([](double) { return 2.0; }, 1.1), std::invalid_argument);
  CHECK_THROWS_AS(BumpShape([](double x) { return std::abs(x) < 1.5 ? 0.5 : 0.0; }, 1.1), std::invalid_argument);
  CHECK_THROWS_AS(BumpShape([](double x) { return -x * x; }, 1.1), std::invalid_argument);
  const BumpShape tent([](double x) { return std::max(0.0, 1.0 - std::abs(x)); }, 1.1);
  const NoiseSpec spec({{2.0, 1.0, 0.0}});
  const Signal r = render_noise(spec, Grid::spanning(-2.0, 2.0, 400), tent);
  CHECK(eval(r, 0.5) == doctest::Approx(1.0));
}

TEST_CASE("noise spec derived quantities") {
  const NoiseSpec spec({{3.0, 11.0, 0.0}, {-5.0, 12.0, 9.0}, {0.0, 1.0, 4.0}, {1.0, 20.0, 18.0}});
  CHECK(spec.k() == 3);  // the a = 0 bump is dropped
  CHECK(spec.beta() == 11.0);
  CHECK(spec.eta() == 9.0);
  CHECK(spec.alpha_bar() == 5.0);
  CHECK(spec.radius() == doctest::Approx(0.1));
  CHECK_THROWS_AS(NoiseSpec({{1.0, 0.0, 0.0}}), std::invalid_argument);
  CHECK(std::isinf(NoiseSpec().beta()));
  CHECK(std::isinf(NoiseSpec({{1.0, 1.0, 0.0}}).eta()));
}

TEST_CASE("render_noise") {
  const Grid g = Grid::spanning(-10.0, 10.0, 4000);
  SUBCASE("empty list gives zero") {
    const Signal r = render_noise(NoiseSpec(), g);
    for (double v : r.values()) CHECK(v == 0.0);
  }
  SUBCASE("single bump peak") {
    const Signal r = render_noise(NoiseSpec({{5.0, 1.0, 0.0}}), g);
    CHECK(eval(r, 0.0) == doctest::Approx(5.0));
  }
  SUBCASE("two disjoint bumps") {
    const NoiseSpec spec({{4.0, 2.0, -3.0}, {-7.0, 3.0, 4.0}});
    const Signal r = render_noise(spec, g);
    double sup = 0.0;
    for (double v : r.values()) sup = std::max(sup, std::abs(v));
    CHECK(sup == doctest::Approx(7.0));
  }
  SUBCASE("bounded by k alpha_bar and zero off the supports") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> a(-50, 50), b(0.5, 5), c(-8, 8);
    for (int t = 0; t < 20; ++t) {
      std::vector<Bump> bumps;
      for (int i = 0; i < 6; ++i) bumps.push_back({a(rng), b(rng), c(rng)});
      const NoiseSpec spec(bumps);
      const Signal r = render_noise(spec, g);
      // per-bump reach sigma / b_i is at most sigma / beta
      const SupportSet supp = SupportSet::of(spec);
      for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(std::abs(r[i]) <= spec.k() * spec.alpha_bar() + 1e-12);
        if (!supp.contains(r.x(i))) CHECK(r[i] == 0.0);
      }
    }
  }
}

TEST_CASE("check_family") {
  CHECK(check_family(NoiseSpec({{1.0, 11.0, 3.0}}), 100.0, 11.0));
  CHECK_FALSE(check_family(NoiseSpec({{1.0, 11.0, 0.0}, {1.0, 11.0, 0.5}}), 1.0, 11.0));
  CHECK(check_family(NoiseSpec({{1.0, 11.0, 0.0}, {1.0, 11.0, 9.0}, {1.0, 11.0, 18.0}}), 8.8, 11.0));
  CHECK_FALSE(check_family(NoiseSpec({{1.0, 10.0, 0.0}}), 1.0, 11.0));
}

TEST_CASE("split identities under min and max shifts") {
  std::mt19937_64 rng(21);
  const Grid g = Grid::spanning(-5.0, 25.0, 15000);
  const double step = g.step;
  NoiseSamplerConfig cfg;
  cfg.k_min = 2;
  cfg.k_max = 6;
  cfg.a = {-80.0, 80.0};
  cfg.b = {8.0, 20.0};
  cfg.c = {0.0, 20.0};
  for (int t = 0; t < 25; ++t) {
    Rng r(static_cast<std::uint64_t>(t) + 100);
    NoiseSamplerConfig c = cfg;
    c.reject_below_gap_factor = 8.0;
    const NoiseSpec spec = sample_noise(r, c);
    const double lambda = spec.radius();
    // rho on the grid, in [lambda, eta/2 - lambda]
    const double hi = spec.eta() / 2.0 - lambda;
    REQUIRE(hi >= lambda);
    std::uniform_real_distribution<double> pick(lambda, hi);
    const double rho = std::ceil(pick(rng) / step) * step;
    if (rho > hi) continue;
    const Signal R = render_noise(spec, g);
    const Signal lo_shift = min_shift(R, rho);
    const Signal hi_shift = max_shift(R, rho);
    const NoiseSpec neg = split_min_shift(spec, rho);
    const NoiseSpec pos = split_max_shift(spec, rho);
    const Signal neg_r = render_noise(neg, g);
    const Signal pos_r = render_noise(pos, g);
    const double tol = 1e-9 * spec.alpha_bar();
    CHECK(sup_dist(lo_shift, neg_r) <= tol);
    CHECK(sup_dist(hi_shift, pos_r) <= tol);
    for (double v : lo_shift.values()) CHECK(v <= tol);
    for (double v : hi_shift.values()) CHECK(v >= -tol);
    // closure: the shifted centers are 2 lambda apart
    if (neg.k() >= 2) CHECK(neg.eta() >= 2.0 * lambda - 1e-12);
    if (pos.k() >= 2) CHECK(pos.eta() >= 2.0 * lambda - 1e-12);
  }
}

TEST_CASE("sample_noise") {
  NoiseSamplerConfig cfg;
  cfg.c = {0.0, 20.0};
  SUBCASE("same seed, same spec") {
    Rng a(42), b(42);
    CHECK(sample_noise(a, cfg) == sample_noise(b, cfg));
  }
  SUBCASE("gap rejection lands in the family") {
    cfg.reject_below_gap_factor = 8.0;
    cfg.b = {5.0, 100.0};
    for (int t = 0; t < 50; ++t) {
      Rng r(static_cast<std::uint64_t>(t));
      const NoiseSpec s = sample_noise(r, cfg);
      CHECK(check_family(s, 8.0 * s.radius(), s.beta()));
    }
  }
  SUBCASE("fixed eta rejection") {
    cfg.reject_below_eta = 1.5;
    Rng r(3);
    for (int t = 0; t < 50; ++t) CHECK(sample_noise(r, cfg).eta() > 1.5);
  }
  SUBCASE("fixed (a, b) pairs") {
    cfg.fixed_ab = std::vector<std::pair<double, double>>{{1.0, 11.0}, {-2.0, 11.0}};
    Rng r(3);
    const NoiseSpec s = sample_noise(r, cfg);
    CHECK(s.k() == 2);
    CHECK(s.bumps()[1].a == -2.0);
  }
  SUBCASE("centers respect the margin") {
    cfg.center_margin = 3.0;
    cfg.margin_beta = 5.0;
    cfg.b = {5.0, 20.0};
    Rng r(8);
    for (int t = 0; t < 100; ++t) {
      const NoiseSpec spec = sample_noise(r, cfg);
      for (const Bump& b : spec.bumps()) {
        CHECK(b.c > 3.0 * 1.1 / 5.0);
        CHECK(b.c < 20.0 - 3.0 * 1.1 / 5.0);
        CHECK(b.b > 5.0);
      }
    }
  }
  SUBCASE("impossible rejection is reported") {
    cfg.k_min = cfg.k_max = 10;
    cfg.reject_below_eta = 5.0;
    cfg.max_attempts = 200;
    Rng r(1);
    CHECK_THROWS_AS(sample_noise(r, cfg), InfeasibleConfig);
  }
}

TEST_CASE("min gap Monte Carlo against the closed form") {
  Rng rng(2024);
  const int k = 5, n = 10000;
  const double ell = 20.0, eta = 1.0;
  int hits = 0;
  for (int i = 0; i < n; ++i) hits += sample_min_gap(rng, k, ell) > eta;
  const double p = oracle::min_gap_law(k, ell, eta);
  const double se = std::sqrt(p * (1 - p) / n);
  CHECK(std::abs(static_cast<double>(hits) / n - p) <= 3 * se);
}
