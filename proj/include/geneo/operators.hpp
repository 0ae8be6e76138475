#pragma once

#include "geneo/signal.hpp"

namespace geneo {

/// Radii of the two-stage filter: `epsilon` for the inner min-shift (removes
/// upward spikes), `delta` for the outer max-shift (removes downward spikes).
struct ShiftParams {
  double epsilon = 0.0;
  double delta = 0.0;

  /// The (2 sigma/beta, sigma/beta) choice that yields the 3 L sigma/beta bound.
  static ShiftParams for_noise(double sigma, double beta);
};

/// out(x) = max(s(x - eps), s(x + eps)). `eps` is snapped to the grid
/// (see snap_shift), which keeps equivariance and non-expansivity exact.
Signal max_shift(const Signal& s, double eps);

/// out(x) = min(s(x - eps), s(x + eps)).
Signal min_shift(const Signal& s, double eps);

/// Grid radii actually used by denoise.
struct SnappedParams {
  std::ptrdiff_t epsilon_nodes = 0;
  std::ptrdiff_t delta_nodes = 0;
  double epsilon = 0.0;
  double delta = 0.0;
};

/// Picks grid radii for denoise. With D = delta and G = epsilon - delta in
/// nodes, the snapped sum 2D + G never exceeds (epsilon + delta) / step + 1.
/// Within that budget D >= delta / step and G >= (epsilon - delta) / step are
/// kept when the grid allows it (the outer max-shift then still steps over any
/// spike the continuous pair would remove); otherwise the smaller of the two
/// margins is made as large as possible. If epsilon <= delta each radius is
/// snapped to the nearest node on its own.
SnappedParams snap_params(const ShiftParams& p, double step);

/// Max-shift by the snapped delta after min-shift by the snapped epsilon
/// (see snap_params).
Signal denoise(const Signal& s, const ShiftParams& p);

/// Convolution with the box kernel T_h = h/2 on [-1/h, 1/h]. The integral of
/// the piecewise-linear interpolant is exact up to round-off.
Signal convolve_box(const Signal& s, double h);

/// Convex combination (1 - 1/n) * 2 sigma/beta + (1/n) * (theta/2 - 2 sigma/beta).
/// Requires theta >= 8 sigma/beta, which makes every tau_n admissible as epsilon.
double tau_schedule(int n, double sigma, double beta, double theta);

namespace reference {

// Serial counterparts of the operators above, built on kernels::serial.
Signal max_shift(const Signal& s, double eps);
Signal min_shift(const Signal& s, double eps);
Signal denoise(const Signal& s, const ShiftParams& p);
Signal convolve_box(const Signal& s, double h);

}  // namespace reference

}  // namespace geneo
