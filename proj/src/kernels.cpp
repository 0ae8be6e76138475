#include "geneo/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace geneo::kernels {
namespace {

inline double extended(std::span<const double> v, std::ptrdiff_t i, EdgePolicy edge) {
  const auto n = static_cast<std::ptrdiff_t>(v.size());
  if (i >= 0 && i < n) return v[static_cast<std::size_t>(i)];
  if (edge == EdgePolicy::ZeroExtend) return 0.0;
  return i < 0 ? v.front() : v.back();
}

inline double pick(double a, double b, Extremum op) {
  return op == Extremum::Max ? std::max(a, b) : std::min(a, b);
}

void check_sizes(std::span<const double> in, std::span<double> out) {
  if (in.size() != out.size()) throw std::invalid_argument("kernel input/output size mismatch");
  if (in.empty()) throw std::invalid_argument("kernel input is empty");
}

// Integral of the extended PL function over [j + t0, j + t1] in index units,
// with 0 <= t0 <= t1 <= 1 inside cell j (between nodes j and j + 1).
double cell_integral(std::span<const double> v, std::ptrdiff_t j, double t0, double t1,
                     EdgePolicy edge) {
  const auto n = static_cast<std::ptrdiff_t>(v.size());
  if (j < 0 || j >= n - 1) {
    const double c = j < 0 ? extended(v, -1, edge) : extended(v, n, edge);
    return c * (t1 - t0);
  }
  const double a = v[static_cast<std::size_t>(j)];
  const double d = v[static_cast<std::size_t>(j + 1)] - a;
  return (t1 - t0) * (a + 0.5 * d * (t0 + t1));
}

// Antiderivative (index units) of the extended PL function, anchored at node 0.
double antiderivative(std::span<const double> v, std::span<const double> prefix, double tau,
                      EdgePolicy edge) {
  const auto last = static_cast<double>(v.size() - 1);
  if (tau <= 0.0) return edge == EdgePolicy::ZeroExtend ? 0.0 : v.front() * tau;
  if (tau >= last) {
    const double tail = edge == EdgePolicy::ZeroExtend ? 0.0 : v.back() * (tau - last);
    return prefix.back() + tail;
  }
  auto j = static_cast<std::size_t>(std::floor(tau));
  j = std::min(j, v.size() - 2);
  const double t = tau - static_cast<double>(j);
  return prefix[j] + t * (v[j] + 0.5 * (v[j + 1] - v[j]) * t);
}

}  // namespace

void shift_extremum(std::span<const double> in, std::span<double> out, std::ptrdiff_t m,
                    EdgePolicy edge, Extremum op) {
  check_sizes(in, out);
  const auto n = static_cast<std::ptrdiff_t>(in.size());
#pragma omp parallel for schedule(static) if (in.size() >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = pick(extended(in, i - m, edge), extended(in, i + m, edge), op);
  }
}

void box_filter(std::span<const double> in, std::span<double> out, double radius, double step,
                double h, EdgePolicy edge) {
  check_sizes(in, out);
  std::vector<double> prefix(in.size());
  prefix[0] = 0.0;
  for (std::size_t j = 1; j < in.size(); ++j) prefix[j] = prefix[j - 1] + 0.5 * (in[j - 1] + in[j]);

  const auto n = static_cast<std::ptrdiff_t>(in.size());
  const double weight = 0.5 * h * step;
#pragma omp parallel for schedule(static) if (in.size() >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double c = static_cast<double>(i);
    out[static_cast<std::size_t>(i)] =
        weight * (antiderivative(in, prefix, c + radius, edge) - antiderivative(in, prefix, c - radius, edge));
  }
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("max_abs_diff: size mismatch");
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  double d = 0.0;
#pragma omp parallel for reduction(max : d) schedule(static) if (a.size() >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    d = std::max(d, std::abs(a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]));
  }
  return d;
}

namespace serial {

void shift_extremum(std::span<const double> in, std::span<double> out, std::ptrdiff_t m,
                    EdgePolicy edge, Extremum op) {
  check_sizes(in, out);
  const auto n = static_cast<std::ptrdiff_t>(in.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = pick(extended(in, i - m, edge), extended(in, i + m, edge), op);
  }
}

void box_filter(std::span<const double> in, std::span<double> out, double radius, double step,
                double h, EdgePolicy edge) {
  check_sizes(in, out);
  const auto n = static_cast<std::ptrdiff_t>(in.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double lo = static_cast<double>(i) - radius;
    const double hi = static_cast<double>(i) + radius;
    const auto first = static_cast<std::ptrdiff_t>(std::floor(lo));
    const auto last = static_cast<std::ptrdiff_t>(std::floor(hi));
    double acc = 0.0;
    for (std::ptrdiff_t j = first; j <= last; ++j) {
      const double t0 = std::max(lo - static_cast<double>(j), 0.0);
      const double t1 = std::min(hi - static_cast<double>(j), 1.0);
      if (t1 > t0) acc += cell_integral(in, j, t0, t1, edge);
    }
    out[static_cast<std::size_t>(i)] = 0.5 * h * step * acc;
  }
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("max_abs_diff: size mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace serial
}  // namespace geneo::kernels
