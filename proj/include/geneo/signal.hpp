#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace geneo {

/// How a signal is extended outside its sampled interval.
enum class EdgePolicy { ZeroExtend, ClampExtend };

/// Thrown when two signals that must share a grid do not.
class GridMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Uniform sample grid: x_i = x_min + i * step, i = 0 .. size - 1.
struct Grid {
  double x_min = 0.0;
  double step = 1.0;
  std::size_t size = 0;

  [[nodiscard]] double x(std::size_t i) const { return x_min + static_cast<double>(i) * step; }
  [[nodiscard]] double x_max() const { return x(size - 1); }

  /// Grid with the given spacing whose nodes are integer multiples of step and
  /// which covers [lo, hi].
  static Grid covering(double lo, double hi, double step);
  /// Grid on [lo, hi] with exactly `intervals` cells.
  static Grid spanning(double lo, double hi, std::size_t intervals);

  /// Same spacing and origin up to 1e-12 relative, same size.
  [[nodiscard]] bool matches(const Grid& other) const;
};

/// A continuous function R -> R stored as uniform samples; evaluation between
/// nodes is linear interpolation and outside the interval follows the edge
/// policy. Values are immutable once constructed.
class Signal {
 public:
  Signal(Grid grid, std::vector<double> values, EdgePolicy edge = EdgePolicy::ZeroExtend);
  Signal(double x_min, double step, std::vector<double> values,
         EdgePolicy edge = EdgePolicy::ZeroExtend);

  /// Samples `f` at every node of `grid`.
  template <class F>
  static Signal sample(const Grid& grid, F&& f, EdgePolicy edge = EdgePolicy::ZeroExtend) {
    std::vector<double> v(grid.size);
    for (std::size_t i = 0; i < grid.size; ++i) v[i] = f(grid.x(i));
    return Signal(grid, std::move(v), edge);
  }
  static Signal zeros(const Grid& grid, EdgePolicy edge = EdgePolicy::ZeroExtend);

  [[nodiscard]] const Grid& grid() const { return grid_; }
  [[nodiscard]] double x_min() const { return grid_.x_min; }
  [[nodiscard]] double x_max() const { return grid_.x_max(); }
  [[nodiscard]] double step() const { return grid_.step; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] EdgePolicy edge_policy() const { return edge_; }
  [[nodiscard]] std::span<const double> values() const { return values_; }
  [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] double x(std::size_t i) const { return grid_.x(i); }

  /// Value at node index i, which may lie outside [0, size); the edge policy
  /// supplies the virtual samples.
  [[nodiscard]] double at_index(std::ptrdiff_t i) const;

  [[nodiscard]] Signal with_values(std::vector<double> values) const;
  [[nodiscard]] Signal with_edge_policy(EdgePolicy edge) const;

 private:
  Grid grid_;
  std::vector<double> values_;
  EdgePolicy edge_;
};

/// Lipschitz constant a signal is known to respect.
struct LipschitzWitness {
  double constant = 0.0;
  [[nodiscard]] bool holds_for(const Signal& s, double rel_tol = 1e-12) const;
};

double eval(const Signal& s, double x);

/// Sup-norm distance on a shared grid. With `allow_resample`, the coarser
/// signal is first interpolated onto the finer grid.
double sup_dist(const Signal& a, const Signal& b, bool allow_resample = false);

/// Lipschitz constant of the piecewise-linear interpolant.
double measure_lipschitz(const Signal& s);

enum class Combine { Add, Sub, PointMax, PointMin };

Signal combine(const Signal& a, const Signal& b, Combine kind);
Signal negate(const Signal& s);
Signal scale(const Signal& s, double c);

/// PL interpolation onto another grid; keeps the edge policy.
Signal resample(const Signal& s, const Grid& target);

/// Moves the sampled function by `shift` grid steps along the same grid
/// (positive = to the right). Vacated nodes take the edge-policy value.
Signal translate(const Signal& s, std::ptrdiff_t shift);

/// Mirror image about the midpoint of the sampled interval.
Signal reflect(const Signal& s);

/// Result of snapping a shift radius to the grid.
struct SnappedShift {
  std::ptrdiff_t nodes = 0;  ///< radius in grid steps, always >= 1
  double value = 0.0;        ///< nodes * step
  bool adjusted = false;     ///< snapping moved the value by more than step / 2
};

/// Snaps a positive radius to the nearest nonzero multiple of `step`.
SnappedShift snap_shift(double radius, double step);

}  // namespace geneo
