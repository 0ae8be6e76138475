#pragma once

#include <optional>
#include <vector>

#include "geneo/persistence.hpp"

namespace geneo {

/// Point-to-point cost between diagram points (x, y), y possibly +inf:
///   min{ max{|x - x'|, |y - y'|}, max{|x - y| / 2, |x' - y'| / 2} }
/// with inf - inf = 0 and every other expression involving inf equal to inf.
/// Throws std::invalid_argument when x > y in either point.
double point_delta(const PersistencePair& p, const PersistencePair& q);

/// Half-persistence, the cost of sending a point to the diagonal.
double diagonal_cost(const PersistencePair& p);

/// One pair of an optimal matching. A missing index means the point is
/// matched to the diagonal.
struct MatchedPair {
  std::optional<std::size_t> first;   ///< index into the first diagram's points
  std::optional<std::size_t> second;  ///< index into the second diagram's points
  bool essential = false;             ///< indices refer to the `essential` lists
  double cost = 0.0;
};

struct MatchResult {
  double distance = 0.0;
  std::vector<MatchedPair> witness;  ///< empty when distance is +inf
};

/// Bottleneck distance d_match. Essential points are matched among
/// themselves in sorted order; the finite parts are solved exactly by a
/// binary search over the candidate costs with a perfect-matching test.
MatchResult bottleneck(const Diagram& a, const Diagram& b);

/// Exhaustive minimum over all matchings; the finite parts together may
/// hold at most kBruteForceLimit points, as may the essential parts.
double bottleneck_brute(const Diagram& a, const Diagram& b);

inline constexpr std::size_t kBruteForceLimit = 16;

}  // namespace geneo
