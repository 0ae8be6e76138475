#pragma once

#include <limits>
#include <vector>

#include "geneo/signal.hpp"

namespace geneo {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// A point of a persistence diagram; `death` is +inf for classes that never die.
struct PersistencePair {
  double birth = 0.0;
  double death = 0.0;

  [[nodiscard]] bool essential() const { return death == kInfinity; }
  [[nodiscard]] double persistence() const { return death - birth; }
  friend bool operator==(const PersistencePair&, const PersistencePair&) = default;
};

/// Degree-0 persistence diagram. Diagonal points are implicit.
struct Diagram {
  std::vector<PersistencePair> finite;
  std::vector<PersistencePair> essential;

  [[nodiscard]] std::size_t size() const { return finite.size() + essential.size(); }
  /// Finite points sorted by (birth, death), essentials by birth.
  [[nodiscard]] Diagram sorted() const;
};

/// Sublevel-set persistence in degree 0 of the PL interpolant on the closed
/// sampled interval, computed with the elder rule. Ties in value are broken
/// by grid index (leftmost is older); zero-persistence pairs are dropped.
Diagram sublevel_pd0(const Signal& s);

/// Same computation on raw vertex values of a path graph.
Diagram sublevel_pd0(std::span<const double> values);

}  // namespace geneo
