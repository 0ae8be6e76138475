#include "geneo/noise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace geneo {

double mother_bump(double x) {
  const double x2 = x * x;
  if (x2 >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - x2));
}

BumpShape::BumpShape(std::function<double(double)> psi, double sigma)
    : psi_(std::move(psi)), sigma_(sigma) {
  if (!psi_) throw std::invalid_argument("bump shape: empty function");
  if (!(sigma_ > 0.0)) throw std::invalid_argument("bump shape: sigma must be positive");
  // Probe well beyond the claimed support as well as inside it.
  constexpr int kSamples = 20000;
  const double span = 2.0 * sigma_;
  for (int i = 0; i <= kSamples; ++i) {
    const double x = -span + 2.0 * span * static_cast<double>(i) / kSamples;
    const double v = psi_(x);
    if (!(v >= 0.0) || v > 1.0) throw std::invalid_argument("bump shape: values must lie in [0, 1]");
    if (std::abs(x) >= sigma_ && v != 0.0)
      throw std::invalid_argument("bump shape: support must lie inside (-sigma, sigma)");
  }
}

BumpShape BumpShape::standard(double sigma) { return BumpShape(&mother_bump, sigma); }

NoiseSpec::NoiseSpec(std::vector<Bump> bumps, double sigma) : sigma_(sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("noise spec: sigma must be positive");
  for (const Bump& bump : bumps) {
    if (!(bump.b > 0.0) || !std::isfinite(bump.b)) throw std::invalid_argument("noise spec: every b_i must be positive");
    if (!std::isfinite(bump.a) || !std::isfinite(bump.c)) throw std::invalid_argument("noise spec: non-finite bump");
    if (bump.a != 0.0) bumps_.push_back(bump);
  }
}

double NoiseSpec::beta() const {
  double beta = std::numeric_limits<double>::infinity();
  for (const Bump& bump : bumps_) beta = std::min(beta, bump.b);
  return beta;
}

double NoiseSpec::eta() const {
  if (bumps_.size() < 2) return std::numeric_limits<double>::infinity();
  std::vector<double> centers;
  centers.reserve(bumps_.size());
  for (const Bump& bump : bumps_) centers.push_back(bump.c);
  std::sort(centers.begin(), centers.end());
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < centers.size(); ++i) gap = std::min(gap, centers[i] - centers[i - 1]);
  return gap;
}

double NoiseSpec::alpha_bar() const {
  double alpha = 0.0;
  for (const Bump& bump : bumps_) alpha = std::max(alpha, std::abs(bump.a));
  return alpha;
}

double NoiseSpec::radius() const { return bumps_.empty() ? 0.0 : sigma_ / beta(); }

SupportSet SupportSet::of(const NoiseSpec& spec) {
  SupportSet out;
  const double r = spec.radius();
  for (const Bump& bump : spec.bumps()) out.intervals.emplace_back(bump.c - r, bump.c + r);
  return out;
}

bool SupportSet::contains(double x) const {
  return std::any_of(intervals.begin(), intervals.end(),
                     [x](const auto& iv) { return x > iv.first && x < iv.second; });
}

namespace {

template <class Shape>
Signal render_with(const NoiseSpec& spec, const Grid& grid, const Shape& psi, double sigma,
                   EdgePolicy edge) {
  std::vector<double> values(grid.size, 0.0);
  const auto last = static_cast<double>(grid.size - 1);
  for (const Bump& bump : spec.bumps()) {
    const double reach = sigma / bump.b;
    const double lo = std::max(std::floor((bump.c - reach - grid.x_min) / grid.step), 0.0);
    const double hi = std::min(std::ceil((bump.c + reach - grid.x_min) / grid.step), last);
    if (hi < lo) continue;
    for (auto i = static_cast<std::size_t>(lo); i <= static_cast<std::size_t>(hi); ++i) {
      values[i] += bump.a * psi(bump.b * (grid.x(i) - bump.c));
    }
  }
  return Signal(grid, std::move(values), edge);
}

NoiseSpec split(const NoiseSpec& spec, double rho, bool keep_negative) {
  std::vector<Bump> out;
  for (const Bump& bump : spec.bumps()) {
    if ((bump.a < 0.0) != keep_negative) continue;
    out.push_back({bump.a, bump.b, bump.c - rho});
    out.push_back({bump.a, bump.b, bump.c + rho});
  }
  return NoiseSpec(std::move(out), spec.sigma());
}

}  // namespace

Signal render_noise(const NoiseSpec& spec, const Grid& grid, EdgePolicy edge) {
  return render_with(spec, grid, &mother_bump, spec.sigma(), edge);
}

Signal render_noise(const NoiseSpec& spec, const Grid& grid, const BumpShape& shape, EdgePolicy edge) {
  if (shape.sigma() > spec.sigma())
    throw std::invalid_argument("render_noise: bump shape support exceeds the noise sigma");
  return render_with(spec, grid, shape, spec.sigma(), edge);
}

bool check_family(const NoiseSpec& spec, double eta, double beta) {
  if (spec.eta() < eta) return false;
  return std::all_of(spec.bumps().begin(), spec.bumps().end(),
                     [beta](const Bump& bump) { return bump.b >= beta; });
}

NoiseSpec split_min_shift(const NoiseSpec& spec, double rho) { return split(spec, rho, true); }
NoiseSpec split_max_shift(const NoiseSpec& spec, double rho) { return split(spec, rho, false); }

NoiseSpec sample_noise(Rng& rng, const NoiseSamplerConfig& cfg) {
  if (cfg.fixed_ab) {
    if (cfg.fixed_ab->empty()) throw std::invalid_argument("sample_noise: fixed_ab is empty");
  } else {
    if (cfg.k_min < 0 || cfg.k_max < cfg.k_min) throw std::invalid_argument("sample_noise: bad k range");
    if (!(cfg.a.hi > cfg.a.lo)) throw std::invalid_argument("sample_noise: empty a range");
    if (!(cfg.b.hi > cfg.b.lo) || cfg.b.lo < 0.0) throw std::invalid_argument("sample_noise: bad b range");
  }
  if (!(cfg.c.hi > cfg.c.lo)) throw std::invalid_argument("sample_noise: empty c range");
  if (cfg.max_attempts < 1) throw std::invalid_argument("sample_noise: max_attempts must be >= 1");

  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    std::vector<Bump> bumps;
    if (cfg.fixed_ab) {
      for (const auto& [a, b] : *cfg.fixed_ab) bumps.push_back({a, b, 0.0});
    } else {
      const int k = uniform_int(rng, cfg.k_min, cfg.k_max);
      bumps.resize(static_cast<std::size_t>(k));
      for (Bump& bump : bumps) bump.a = uniform_open(rng, cfg.a.lo, cfg.a.hi);
      for (Bump& bump : bumps) bump.b = uniform_open(rng, cfg.b.lo, cfg.b.hi);
    }
    double beta = std::numeric_limits<double>::infinity();
    for (const Bump& bump : bumps) beta = std::min(beta, bump.b);

    const double margin = cfg.center_margin * cfg.sigma / cfg.margin_beta.value_or(beta);
    const double c_lo = cfg.c.lo + (bumps.empty() ? 0.0 : margin);
    const double c_hi = cfg.c.hi - (bumps.empty() ? 0.0 : margin);
    if (!bumps.empty() && !(c_hi > c_lo)) continue;
    for (Bump& bump : bumps) bump.c = uniform_open(rng, c_lo, c_hi);

    NoiseSpec spec(std::move(bumps), cfg.sigma);
    const double eta = spec.eta();
    if (cfg.reject_below_eta && !(eta > *cfg.reject_below_eta)) continue;
    if (cfg.reject_below_gap_factor && spec.k() > 0 &&
        !(eta > *cfg.reject_below_gap_factor * spec.radius()))
      continue;
    return spec;
  }
  throw InfeasibleConfig("sample_noise: no admissible noise spec after " +
                         std::to_string(cfg.max_attempts) + " attempts");
}

double sample_min_gap(Rng& rng, int k, double ell) {
  if (k < 2) throw std::invalid_argument("sample_min_gap: k must be >= 2");
  std::vector<double> xs(static_cast<std::size_t>(k));
  std::uniform_real_distribution<double> dist(0.0, ell);
  for (double& x : xs) x = dist(rng);
  std::sort(xs.begin(), xs.end());
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < xs.size(); ++i) gap = std::min(gap, xs[i] - xs[i - 1]);
  return gap;
}

}  // namespace geneo
