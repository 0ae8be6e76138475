#pragma once

#include <string>
#include <vector>

namespace geneo {

/// Parameters of the error guarantees. `theta` is the guaranteed minimum
/// distance between bump centers, `ell` the length of the interval the
/// centers are drawn from, `alpha_bar` the largest bump height.
struct BoundInputs {
  double L = 1.0;
  double sigma = 1.1;
  double beta = 1.0;
  double theta = 0.0;
  int k = 1;
  double ell = 1.0;
  double alpha_bar = 0.0;
  double epsilon = 0.0;
  double delta = 0.0;
};

/// A bound value and the preconditions it failed, if any. The value is only
/// a certified bound when `valid` is true.
struct BoundReport {
  double value = 0.0;
  bool valid = false;
  std::vector<std::string> violated_conditions;
  std::string note;
};

/// L (epsilon + delta), valid when
///   2 sigma/beta <= epsilon <= theta/2 - 2 sigma/beta  and
///   sigma/beta <= delta <= min{theta - 2 epsilon, 2 epsilon} / 2 - sigma/beta.
/// Non-strict comparisons allow 1e-12 relative slack for round-off.
BoundReport deterministic_bound(const BoundInputs& in);

/// 3 L sigma / beta.
double corollary_bound(double L, double sigma, double beta);

/// P(min pairwise gap of k uniform points on [0, ell] exceeds eta).
double min_gap_prob(int k, double ell, double eta);

/// 3 L sigma/beta + k alpha_bar (1 - p), p = min_gap_prob(k, ell, 8 sigma/beta).
/// Requires k >= 2 and sigma/beta < ell / (8 (k - 1)) (strict). For k = 1 it
/// reduces to corollary_bound. When the precondition fails the value is still
/// filled in (with p clamped by min_gap_prob) but `valid` is false.
BoundReport expected_bound(const BoundInputs& in);

/// Same right-hand side as expected_bound, certifying the expected bottleneck
/// distance between the diagrams of the clean and the filtered signal.
BoundReport matching_expected_bound(const BoundInputs& in);

}  // namespace geneo
