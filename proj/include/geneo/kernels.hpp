#pragma once

// Array-level inner loops behind the signal operators. Each kernel has an
// OpenMP version (namespace geneo::kernels) and a plain serial version
// (namespace geneo::kernels::serial) that the tests treat as the reference
// and the benchmark compares against.
//
// The shift kernels are elementwise, so both versions produce bit-identical
// output for any thread count. The box filter versions differ in method
// (prefix integral vs. direct per-node quadrature) and agree to round-off.

#include <cstddef>
#include <span>

#include "geneo/signal.hpp"

namespace geneo::kernels {

enum class Extremum { Max, Min };

/// Problem size below which the OpenMP kernels stay on one thread.
inline constexpr std::size_t kParallelThreshold = 2048;

/// out[i] = max or min of in[i - m] and in[i + m]; indices outside the array
/// follow `edge`.
void shift_extremum(std::span<const double> in, std::span<double> out, std::ptrdiff_t m,
                    EdgePolicy edge, Extremum op);

/// out[i] = (h / 2) * integral of the PL interpolant over
/// [x_i - half_width, x_i + half_width]; `radius` is half_width / step.
void box_filter(std::span<const double> in, std::span<double> out, double radius, double step,
                double h, EdgePolicy edge);

/// max_i |a[i] - b[i]|
double max_abs_diff(std::span<const double> a, std::span<const double> b);

namespace serial {

void shift_extremum(std::span<const double> in, std::span<double> out, std::ptrdiff_t m,
                    EdgePolicy edge, Extremum op);
void box_filter(std::span<const double> in, std::span<double> out, double radius, double step,
                double h, EdgePolicy edge);
double max_abs_diff(std::span<const double> a, std::span<const double> b);

}  // namespace serial
}  // namespace geneo::kernels
