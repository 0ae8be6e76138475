#include "geneo/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "geneo/kernels.hpp"
#include "geneo/persistence.hpp"

namespace geneo {
namespace {

using ShiftKernel = void (*)(std::span<const double>, std::span<double>, std::ptrdiff_t, EdgePolicy,
                             kernels::Extremum);
using BoxKernel = void (*)(std::span<const double>, std::span<double>, double, double, double,
                           EdgePolicy);

Signal shift_nodes(const Signal& s, std::ptrdiff_t m, kernels::Extremum op, ShiftKernel kernel) {
  std::vector<double> out(s.size());
  kernel(s.values(), out, m, s.edge_policy(), op);
  return s.with_values(std::move(out));
}

Signal apply_shift(const Signal& s, double eps, kernels::Extremum op, ShiftKernel kernel) {
  if (!(eps > 0.0)) throw std::invalid_argument("shift radius must be positive");
  return shift_nodes(s, snap_shift(eps, s.step()).nodes, op, kernel);
}

Signal apply_denoise(const Signal& s, const ShiftParams& p, ShiftKernel kernel) {
  const SnappedParams q = snap_params(p, s.step());
  return shift_nodes(shift_nodes(s, q.epsilon_nodes, kernels::Extremum::Min, kernel), q.delta_nodes,
                     kernels::Extremum::Max, kernel);
}

// floor / ceil that ignore round-off next to an integer
double snap_floor(double x) {
  const double r = std::round(x);
  return std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x)) ? r : std::floor(x);
}

double snap_ceil(double x) {
  const double r = std::round(x);
  return std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x)) ? r : std::ceil(x);
}

Signal apply_box(const Signal& s, double h, BoxKernel kernel) {
  if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("box kernel parameter h must be positive");
  std::vector<double> out(s.size());
  kernel(s.values(), out, (1.0 / h) / s.step(), s.step(), h, s.edge_policy());
  return s.with_values(std::move(out));
}

}  // namespace

ShiftParams ShiftParams::for_noise(double sigma, double beta) {
  if (!(sigma > 0.0) || !(beta > 0.0)) throw std::invalid_argument("sigma and beta must be positive");
  const double r = sigma / beta;
  return {2.0 * r, r};
}

Signal max_shift(const Signal& s, double eps) {
  return apply_shift(s, eps, kernels::Extremum::Max, &kernels::shift_extremum);
}

Signal min_shift(const Signal& s, double eps) {
  return apply_shift(s, eps, kernels::Extremum::Min, &kernels::shift_extremum);
}

SnappedParams snap_params(const ShiftParams& p, double step) {
  if (!(p.epsilon > 0.0) || !(p.delta > 0.0) || !std::isfinite(p.epsilon) || !std::isfinite(p.delta))
    throw std::invalid_argument("denoise radii must be positive and finite");
  if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
  SnappedParams q;
  if (p.epsilon > p.delta) {
    const double a = p.delta / step, g = (p.epsilon - p.delta) / step;
    const double budget = std::max(3.0, snap_floor(2.0 * a + g + 1.0));
    double D = std::max(1.0, snap_ceil(a)), G = std::max(1.0, snap_ceil(g));
    if (2.0 * D + G > budget) {
      // Spend the whole budget, balancing the two shortfalls.
      double best = -kInfinity;
      for (double d = std::max(1.0, std::floor(a) - 1.0); d <= std::ceil(a) + 1.0; d += 1.0) {
        const double rest = budget - 2.0 * d;
        if (rest < 1.0) break;
        const double margin = std::min(d - a, rest - g);
        if (margin > best) {
          best = margin;
          D = d;
          G = rest;
        }
      }
    }
    q.delta_nodes = static_cast<std::ptrdiff_t>(D);
    q.epsilon_nodes = static_cast<std::ptrdiff_t>(D + G);
  } else {
    q.delta_nodes = snap_shift(p.delta, step).nodes;
    q.epsilon_nodes = snap_shift(p.epsilon, step).nodes;
  }
  q.epsilon = static_cast<double>(q.epsilon_nodes) * step;
  q.delta = static_cast<double>(q.delta_nodes) * step;
  return q;
}

Signal denoise(const Signal& s, const ShiftParams& p) { return apply_denoise(s, p, &kernels::shift_extremum); }

Signal convolve_box(const Signal& s, double h) { return apply_box(s, h, &kernels::box_filter); }

double tau_schedule(int n, double sigma, double beta, double theta) {
  if (n < 1) throw std::invalid_argument("tau_schedule: n must be >= 1");
  if (!(sigma > 0.0) || !(beta > 0.0)) throw std::invalid_argument("tau_schedule: sigma, beta must be positive");
  const double r = sigma / beta;
  if (theta < 8.0 * r) throw std::invalid_argument("tau_schedule: theta must be >= 8 sigma/beta");
  const double w = 1.0 / static_cast<double>(n);
  return (1.0 - w) * 2.0 * r + w * (0.5 * theta - 2.0 * r);
}

namespace reference {

Signal max_shift(const Signal& s, double eps) {
  return apply_shift(s, eps, kernels::Extremum::Max, &kernels::serial::shift_extremum);
}

Signal min_shift(const Signal& s, double eps) {
  return apply_shift(s, eps, kernels::Extremum::Min, &kernels::serial::shift_extremum);
}

Signal denoise(const Signal& s, const ShiftParams& p) {
  return apply_denoise(s, p, &kernels::serial::shift_extremum);
}

Signal convolve_box(const Signal& s, double h) { return apply_box(s, h, &kernels::serial::box_filter); }

}  // namespace reference
}  // namespace geneo
