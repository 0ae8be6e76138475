#include "geneo/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace geneo {
namespace {

bool at_most(double lhs, double rhs) {
  return lhs <= rhs + 1e-12 * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

void require(BoundReport& report, bool ok, const char* condition) {
  if (!ok) report.violated_conditions.emplace_back(condition);
}

void check_common(BoundReport& report, const BoundInputs& in) {
  require(report, in.L >= 0.0, "L >= 0");
  require(report, in.sigma > 0.0, "sigma > 0");
  require(report, in.beta > 0.0, "beta > 0");
}

}  // namespace

BoundReport deterministic_bound(const BoundInputs& in) {
  BoundReport report;
  check_common(report, in);
  require(report, in.theta > 0.0, "theta > 0");
  if (!report.violated_conditions.empty()) return report;

  const double r = in.sigma / in.beta;
  const double eps = in.epsilon;
  const double delta = in.delta;
  require(report, at_most(8.0 * r, in.theta), "theta >= 8 sigma/beta");
  require(report, at_most(2.0 * r, eps), "2 sigma/beta <= epsilon");
  require(report, at_most(eps, in.theta / 2.0 - 2.0 * r), "epsilon <= theta/2 - 2 sigma/beta");
  require(report, at_most(r, delta), "sigma/beta <= delta");
  require(report, at_most(delta, 0.5 * std::min(in.theta - 2.0 * eps, 2.0 * eps) - r),
          "delta <= min{theta - 2 epsilon, 2 epsilon}/2 - sigma/beta");

  report.value = in.L * (eps + delta);
  report.valid = report.violated_conditions.empty();
  return report;
}

double corollary_bound(double L, double sigma, double beta) { return 3.0 * L * sigma / beta; }

double min_gap_prob(int k, double ell, double eta) {
  if (k < 1) return 0.0;
  if (eta <= 0.0 || k == 1) return 1.0;
  const double limit = ell / static_cast<double>(k - 1);
  if (eta >= limit) return 0.0;
  return std::pow(1.0 - static_cast<double>(k - 1) * eta / ell, k);
}

BoundReport expected_bound(const BoundInputs& in) {
  BoundReport report;
  check_common(report, in);
  require(report, in.k >= 1, "k >= 1");
  require(report, in.ell > 0.0, "ell > 0");
  require(report, in.alpha_bar >= 0.0, "alpha_bar >= 0");
  if (!report.violated_conditions.empty()) return report;

  const double r = in.sigma / in.beta;
  const double base = corollary_bound(in.L, in.sigma, in.beta);
  if (in.k == 1) {
    report.value = base;
    report.valid = true;
    report.note = "k = 1: no pair of centers, separation holds with probability 1";
    return report;
  }
  require(report, r < in.ell / (8.0 * static_cast<double>(in.k - 1)), "sigma/beta < ell / (8 (k - 1))");
  const double p = min_gap_prob(in.k, in.ell, 8.0 * r);
  report.value = base + static_cast<double>(in.k) * in.alpha_bar * (1.0 - p);
  report.valid = report.violated_conditions.empty();
  return report;
}

BoundReport matching_expected_bound(const BoundInputs& in) {
  BoundReport report = expected_bound(in);
  if (report.note.empty()) report.note = "bounds E[d_match] of the clean and filtered diagrams";
  return report;
}

}  // namespace geneo
