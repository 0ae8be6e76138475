#pragma once

// Independent reference computations used by the tests. None of these call
// into the library's algorithms; they recompute the same quantities by the
// most direct route available.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "geneo/matching.hpp"
#include "geneo/persistence.hpp"
#include "geneo/signal.hpp"

namespace oracle {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Value at index i with the given edge rule.
inline double sample_at(const std::vector<double>& v, std::ptrdiff_t i, geneo::EdgePolicy edge) {
  const auto n = static_cast<std::ptrdiff_t>(v.size());
  if (i >= 0 && i < n) return v[static_cast<std::size_t>(i)];
  if (edge == geneo::EdgePolicy::ZeroExtend) return 0.0;
  return i < 0 ? v.front() : v.back();
}

inline std::vector<double> shift(const std::vector<double>& v, std::ptrdiff_t m, geneo::EdgePolicy edge,
                                 bool take_max) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto ii = static_cast<std::ptrdiff_t>(i);
    const double l = sample_at(v, ii - m, edge), r = sample_at(v, ii + m, edge);
    out[i] = take_max ? (l > r ? l : r) : (l < r ? l : r);
  }
  return out;
}

// Degree-0 diagram from the "nearest older vertex" characterisation: a vertex
// dies at the lower of the two barriers (highest value crossed on the way to
// the nearest strictly older vertex on each side).
inline std::vector<std::pair<double, double>> pd0(const std::vector<double>& v) {
  const auto older = [&](std::size_t a, std::size_t b) { return v[a] < v[b] || (v[a] == v[b] && a < b); };
  std::vector<std::pair<double, double>> out;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    double best = kInf;
    // left
    {
      double barrier = v[i];
      for (std::size_t j = i; j-- > 0;) {
        if (older(j, i)) {
          best = std::min(best, barrier);
          break;
        }
        barrier = std::max(barrier, v[j]);
      }
    }
    {
      double barrier = v[i];
      for (std::size_t j = i + 1; j < n; ++j) {
        if (older(j, i)) {
          best = std::min(best, barrier);
          break;
        }
        barrier = std::max(barrier, v[j]);
      }
    }
    if (best > v[i]) out.emplace_back(v[i], best);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline double delta(const geneo::PersistencePair& p, const geneo::PersistencePair& q) {
  const auto diff = [](double a, double b) { return (std::isinf(a) && a == b) ? 0.0 : std::abs(a - b); };
  const double point = std::max(diff(p.birth, q.birth), diff(p.death, q.death));
  const double diag_p = std::isinf(p.death) ? kInf : (p.death - p.birth) / 2.0;
  const double diag_q = std::isinf(q.death) ? kInf : (q.death - q.birth) / 2.0;
  return std::min(point, std::max(diag_p, diag_q));
}

// Bottleneck distance by enumerating every permutation of the diagonal-augmented
// point lists (each side gets copies of the other side's diagonal projections).
inline double bottleneck_permutations(const geneo::Diagram& a, const geneo::Diagram& b) {
  std::vector<geneo::PersistencePair> pa, pb;
  for (const auto* d : {&a.essential, &a.finite}) pa.insert(pa.end(), d->begin(), d->end());
  for (const auto* d : {&b.essential, &b.finite}) pb.insert(pb.end(), d->begin(), d->end());
  const std::size_t na = pa.size(), nb = pb.size(), n = na + nb;
  // index >= na on side A means "diagonal"; index >= nb on side B likewise
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = kInf;
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < n && worst < best; ++i) {
      const std::size_t j = perm[i];
      const bool ia = i < na, jb = j < nb;
      double c = 0.0;
      if (ia && jb) c = delta(pa[i], pb[j]);
      else if (ia) c = std::isinf(pa[i].death) ? kInf : (pa[i].death - pa[i].birth) / 2.0;
      else if (jb) c = std::isinf(pb[j].death) ? kInf : (pb[j].death - pb[j].birth) / 2.0;
      worst = std::max(worst, c);
    }
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// (h/2) * integral of eval(s, .) over [x - 1/h, x + 1/h]. The window is cut
// at every grid node; the interpolant is linear on each piece, so the midpoint
// rule is exact there (and ignores the jump at a zero-extended end).
inline double box_integral(const geneo::Signal& s, double x, double h) {
  const double lo = x - 1.0 / h, hi = x + 1.0 / h;
  std::vector<double> cuts{lo};
  const double first = std::ceil((lo - s.x_min()) / s.step());
  for (double k = first;; k += 1.0) {
    const double node = s.x_min() + k * s.step();
    if (node >= hi) break;
    if (node > lo) cuts.push_back(node);
  }
  cuts.push_back(hi);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    sum += (cuts[i + 1] - cuts[i]) * geneo::eval(s, 0.5 * (cuts[i] + cuts[i + 1]));
  }
  return 0.5 * h * sum;
}

inline double min_gap_law(int k, double ell, double eta) {
  if (eta <= 0.0) return 1.0;
  if (k <= 1) return 1.0;
  const double base = 1.0 - (k - 1) * eta / ell;
  if (base <= 0.0) return 0.0;
  return std::pow(base, k);
}

// Random walk on a grid, optionally zero-padded on both sides.
inline geneo::Signal random_signal(std::mt19937_64& rng, std::size_t n, double step, std::size_t pad = 0,
                                   double jump = 1.0) {
  std::normal_distribution<double> d(0.0, jump);
  std::vector<double> v(n + 2 * pad, 0.0);
  double y = d(rng);
  for (std::size_t i = 0; i < n; ++i) {
    y += d(rng);
    v[pad + i] = y;
  }
  return geneo::Signal(-0.5 * step * static_cast<double>(v.size()), step, std::move(v));
}

// Random diagram: `finite` points with birth < death, `essential` infinite points.
inline geneo::Diagram random_diagram(std::mt19937_64& rng, std::size_t finite, std::size_t essential,
                                     bool integer_grid) {
  std::uniform_real_distribution<double> u(-5.0, 5.0), len(0.0, 6.0);
  const auto draw = [&](std::uniform_real_distribution<double>& d) {
    const double x = d(rng);
    return integer_grid ? std::round(x) : x;
  };
  geneo::Diagram out;
  for (std::size_t i = 0; i < finite; ++i) {
    const double b = draw(u);
    out.finite.push_back({b, b + std::max(integer_grid ? 1.0 : 1e-3, draw(len))});
  }
  for (std::size_t i = 0; i < essential; ++i) out.essential.push_back({draw(u), kInf});
  return out;
}

}  // namespace oracle
