#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "geneo/random.hpp"
#include "geneo/signal.hpp"

namespace geneo {

/// Support radius used throughout the experiments; the standard bump lives on (-1, 1).
inline constexpr double kDefaultSigma = 1.1;

/// Raised when a sampler cannot satisfy its constraints within its attempt budget.
class InfeasibleConfig : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// psi(x) = exp(1 - 1 / (1 - x^2)) on (-1, 1), zero elsewhere.
double mother_bump(double x);

/// A mother bump psi together with the sigma it is certified against:
/// 0 <= psi <= 1 and psi vanishes outside (-sigma, sigma). The constructor
/// checks these on a dense sample and throws std::invalid_argument otherwise.
class BumpShape {
 public:
  BumpShape(std::function<double(double)> psi, double sigma);
  static BumpShape standard(double sigma = kDefaultSigma);

  [[nodiscard]] double operator()(double x) const { return psi_(x); }
  [[nodiscard]] double sigma() const { return sigma_; }

 private:
  std::function<double(double)> psi_;
  double sigma_;
};

/// One term a * psi(b * (x - c)).
struct Bump {
  double a = 0.0;
  double b = 1.0;
  double c = 0.0;

  friend bool operator==(const Bump&, const Bump&) = default;
};

/// R(x) = sum_i a_i psi(b_i (x - c_i)). Zero-height bumps are dropped on construction.
class NoiseSpec {
 public:
  NoiseSpec() = default;
  explicit NoiseSpec(std::vector<Bump> bumps, double sigma = kDefaultSigma);

  [[nodiscard]] const std::vector<Bump>& bumps() const { return bumps_; }
  [[nodiscard]] double sigma() const { return sigma_; }
  [[nodiscard]] int k() const { return static_cast<int>(bumps_.size()); }

  /// min_i b_i; +inf without bumps.
  [[nodiscard]] double beta() const;
  /// min_{i != j} |c_i - c_j|; +inf when k <= 1.
  [[nodiscard]] double eta() const;
  /// max_i |a_i|; 0 without bumps.
  [[nodiscard]] double alpha_bar() const;
  /// sigma / beta, the radius bounding every bump's support; 0 without bumps.
  [[nodiscard]] double radius() const;

  friend bool operator==(const NoiseSpec&, const NoiseSpec&) = default;

 private:
  std::vector<Bump> bumps_;
  double sigma_ = kDefaultSigma;
};

/// Union of the open intervals (c_i - sigma/beta, c_i + sigma/beta); R vanishes outside.
struct SupportSet {
  std::vector<std::pair<double, double>> intervals;

  static SupportSet of(const NoiseSpec& spec);
  [[nodiscard]] bool contains(double x) const;
};

Signal render_noise(const NoiseSpec& spec, const Grid& grid, EdgePolicy edge = EdgePolicy::ZeroExtend);
Signal render_noise(const NoiseSpec& spec, const Grid& grid, const BumpShape& shape,
                    EdgePolicy edge = EdgePolicy::ZeroExtend);

/// Centers pairwise at least `eta` apart and every b_i >= beta.
bool check_family(const NoiseSpec& spec, double eta, double beta);

/// Bumps of min_shift(R, rho) predicted by the noise-splitting identity:
/// every negative bump reappears at c - rho and c + rho. Valid when
/// sigma/beta <= lambda <= rho <= eta/2 - lambda.
NoiseSpec split_min_shift(const NoiseSpec& spec, double rho);
/// Same for max_shift(R, rho), keeping the positive bumps.
NoiseSpec split_max_shift(const NoiseSpec& spec, double rho);

struct UniformRange {
  double lo = 0.0;
  double hi = 1.0;
};

/// Distribution of a random noise spec. Centers are drawn from
/// (c.lo + m * sigma/beta_m, c.hi - m * sigma/beta_m) where m = center_margin
/// and beta_m is `margin_beta` if set, else the drawn min_i b_i.
struct NoiseSamplerConfig {
  int k_min = 1;
  int k_max = 10;
  UniformRange a{-100.0, 100.0};
  UniformRange b{0.0, 100.0};
  UniformRange c{0.0, 1.0};
  double center_margin = 0.0;
  std::optional<double> margin_beta;
  double sigma = kDefaultSigma;
  /// Fixed (a_i, b_i) pairs; when set, k and the a/b laws are ignored and only
  /// the centers are random.
  std::optional<std::vector<std::pair<double, double>>> fixed_ab;
  /// Accept only draws with eta > this value.
  std::optional<double> reject_below_eta;
  /// Accept only draws with eta > factor * sigma / (drawn beta).
  std::optional<double> reject_below_gap_factor;
  int max_attempts = 100000;
};

/// Draws a spec from `cfg`; throws InfeasibleConfig after max_attempts rejections.
NoiseSpec sample_noise(Rng& rng, const NoiseSamplerConfig& cfg);

/// Minimum gap between k independent uniform points on [0, ell] (test utility
/// for the min-gap law; k >= 2).
double sample_min_gap(Rng& rng, int k, double ell);

}  // namespace geneo
