#include "geneo/signal.hpp"

#include "geneo/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace geneo {

Grid Grid::covering(double lo, double hi, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
  if (!(hi > lo)) throw std::invalid_argument("grid interval must have hi > lo");
  const auto first = static_cast<std::ptrdiff_t>(std::floor(lo / step + 1e-9));
  const auto last = static_cast<std::ptrdiff_t>(std::ceil(hi / step - 1e-9));
  return Grid{static_cast<double>(first) * step, step,
              static_cast<std::size_t>(std::max<std::ptrdiff_t>(last - first + 1, 2))};
}

Grid Grid::spanning(double lo, double hi, std::size_t intervals) {
  if (!(hi > lo)) throw std::invalid_argument("grid interval must have hi > lo");
  if (intervals == 0) throw std::invalid_argument("grid needs at least one interval");
  return Grid{lo, (hi - lo) / static_cast<double>(intervals), intervals + 1};
}

bool Grid::matches(const Grid& other) const {
  if (size != other.size) return false;
  const double tol = 1e-12 * std::max(step, other.step);
  return std::abs(step - other.step) <= tol &&
         std::abs(x_min - other.x_min) <= 1e-12 * std::max({std::abs(x_min), std::abs(other.x_min), step});
}

Signal::Signal(Grid grid, std::vector<double> values, EdgePolicy edge)
    : grid_(grid), values_(std::move(values)), edge_(edge) {
  if (values_.size() < 2) throw std::invalid_argument("signal needs at least two samples");
  if (!(grid_.step > 0.0) || !std::isfinite(grid_.step))
    throw std::invalid_argument("signal step must be positive and finite");
  grid_.size = values_.size();
}

Signal::Signal(double x_min, double step, std::vector<double> values, EdgePolicy edge)
    : Signal(Grid{x_min, step, values.size()}, std::move(values), edge) {}

Signal Signal::zeros(const Grid& grid, EdgePolicy edge) {
  return Signal(grid, std::vector<double>(grid.size, 0.0), edge);
}

double Signal::at_index(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(values_.size());
  if (i >= 0 && i < n) return values_[static_cast<std::size_t>(i)];
  if (edge_ == EdgePolicy::ZeroExtend) return 0.0;
  return i < 0 ? values_.front() : values_.back();
}

Signal Signal::with_values(std::vector<double> values) const {
  if (values.size() != values_.size()) throw GridMismatch("replacement values change the grid size");
  return Signal(grid_, std::move(values), edge_);
}

Signal Signal::with_edge_policy(EdgePolicy edge) const { return Signal(grid_, values_, edge); }

bool LipschitzWitness::holds_for(const Signal& s, double rel_tol) const {
  return measure_lipschitz(s) <= constant * (1.0 + rel_tol) + rel_tol;
}

double eval(const Signal& s, double x) {
  const double t = (x - s.x_min()) / s.step();
  const auto last = static_cast<double>(s.size() - 1);
  if (t < 0.0 || t > last) {
    // Tolerate round-off right at the ends.
    if (t > -1e-12 && t < 0.0) return s[0];
    if (t < last + 1e-12 && t > last) return s[s.size() - 1];
    if (s.edge_policy() == EdgePolicy::ZeroExtend) return 0.0;
    return t < 0.0 ? s[0] : s[s.size() - 1];
  }
  const double fl = std::floor(t);
  auto i = static_cast<std::size_t>(fl);
  if (i >= s.size() - 1) return s[s.size() - 1];
  const double frac = t - fl;
  if (frac == 0.0) return s[i];
  return s[i] + frac * (s[i + 1] - s[i]);
}

namespace {

void require_shared(const Signal& a, const Signal& b) {
  if (!a.grid().matches(b.grid())) throw GridMismatch("signals do not share a grid");
}

}  // namespace

double sup_dist(const Signal& a, const Signal& b, bool allow_resample) {
  if (!a.grid().matches(b.grid())) {
    if (!allow_resample) throw GridMismatch("sup_dist: signals do not share a grid");
    const Signal& fine = a.step() <= b.step() ? a : b;
    const Signal& coarse = a.step() <= b.step() ? b : a;
    return sup_dist(fine, resample(coarse, fine.grid()), false);
  }
  return kernels::max_abs_diff(a.values(), b.values());
}

double measure_lipschitz(const Signal& s) {
  double m = 0.0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) m = std::max(m, std::abs(s[i + 1] - s[i]));
  return m / s.step();
}

Signal combine(const Signal& a, const Signal& b, Combine kind) {
  require_shared(a, b);
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    switch (kind) {
      case Combine::Add: out[i] = a[i] + b[i]; break;
      case Combine::Sub: out[i] = a[i] - b[i]; break;
      case Combine::PointMax: out[i] = std::max(a[i], b[i]); break;
      case Combine::PointMin: out[i] = std::min(a[i], b[i]); break;
    }
  }
  return a.with_values(std::move(out));
}

Signal negate(const Signal& s) {
  std::vector<double> out(s.values().begin(), s.values().end());
  for (double& v : out) v = -v;
  return s.with_values(std::move(out));
}

Signal scale(const Signal& s, double c) {
  std::vector<double> out(s.values().begin(), s.values().end());
  for (double& v : out) v *= c;
  return s.with_values(std::move(out));
}

Signal resample(const Signal& s, const Grid& target) {
  return Signal::sample(target, [&](double x) { return eval(s, x); }, s.edge_policy());
}

Signal translate(const Signal& s, std::ptrdiff_t shift) {
  std::vector<double> out(s.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s.at_index(static_cast<std::ptrdiff_t>(i) - shift);
  return s.with_values(std::move(out));
}

Signal reflect(const Signal& s) {
  std::vector<double> out(s.values().rbegin(), s.values().rend());
  return s.with_values(std::move(out));
}

SnappedShift snap_shift(double radius, double step) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw std::invalid_argument("shift radius must be positive and finite");
  if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
  auto nodes = static_cast<std::ptrdiff_t>(std::llround(radius / step));
  nodes = std::max<std::ptrdiff_t>(nodes, 1);
  SnappedShift out;
  out.nodes = nodes;
  out.value = static_cast<double>(nodes) * step;
  out.adjusted = std::abs(out.value - radius) > 0.5 * step * (1.0 + 1e-12);
  return out;
}

}  // namespace geneo
