#include "geneo/matching.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace geneo {
namespace {

// |u - v| under the diagram conventions: inf - inf = 0, anything else with inf is inf.
double gap(double u, double v) {
  if (u == kInfinity && v == kInfinity) return 0.0;
  if (u == kInfinity || v == kInfinity) return kInfinity;
  return std::abs(u - v);
}

void validate(const PersistencePair& p) {
  if (std::isnan(p.birth) || std::isnan(p.death) || !std::isfinite(p.birth))
    throw std::invalid_argument("diagram point must have a finite birth");
  if (p.birth > p.death) throw std::invalid_argument("diagram point has birth > death");
}

// Bipartite graph between the two augmented point sets, with edges whose cost
// is at most a threshold. Left: a's points then one diagonal slot per b point.
// Right: b's points then one diagonal slot per a point.
class AugmentedMatcher {
 public:
  AugmentedMatcher(const std::vector<PersistencePair>& a, const std::vector<PersistencePair>& b)
      : n1_(a.size()), n2_(b.size()), cross_(n1_ * n2_), diag_a_(n1_), diag_b_(n2_) {
    for (std::size_t i = 0; i < n1_; ++i) {
      diag_a_[i] = diagonal_cost(a[i]);
      for (std::size_t j = 0; j < n2_; ++j) cross_[i * n2_ + j] = point_delta(a[i], b[j]);
    }
    for (std::size_t j = 0; j < n2_; ++j) diag_b_[j] = diagonal_cost(b[j]);
  }

  std::vector<double> candidates() const {
    std::vector<double> c(cross_);
    c.insert(c.end(), diag_a_.begin(), diag_a_.end());
    c.insert(c.end(), diag_b_.begin(), diag_b_.end());
    c.push_back(0.0);
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
  }

  // Perfect matching using edges of cost <= r; fills match_right_ on success.
  bool feasible(double r) {
    const std::size_t n = n1_ + n2_;
    match_right_.assign(n, kUnmatched);
    for (std::size_t left = 0; left < n; ++left) {
      visited_.assign(n, false);
      if (!augment(left, r)) return false;
    }
    return true;
  }

  // Pairs of the last feasible matching, excluding diagonal-to-diagonal.
  std::vector<MatchedPair> pairs() const {
    std::vector<MatchedPair> out;
    for (std::size_t right = 0; right < match_right_.size(); ++right) {
      const std::size_t left = match_right_[right];
      const bool left_real = left < n1_;
      const bool right_real = right < n2_;
      if (left_real && right_real) {
        out.push_back({left, right, false, cross_[left * n2_ + right]});
      } else if (left_real) {
        out.push_back({left, std::nullopt, false, diag_a_[left]});
      } else if (right_real) {
        out.push_back({std::nullopt, right, false, diag_b_[right]});
      }
    }
    std::sort(out.begin(), out.end(), [](const MatchedPair& l, const MatchedPair& r) {
      const auto key = [](const MatchedPair& m) {
        return std::pair{m.first.value_or(SIZE_MAX), m.second.value_or(SIZE_MAX)};
      };
      return key(l) < key(r);
    });
    return out;
  }

 private:
  static constexpr std::size_t kUnmatched = SIZE_MAX;

  double cost(std::size_t left, std::size_t right) const {
    const bool left_real = left < n1_;
    const bool right_real = right < n2_;
    if (left_real && right_real) return cross_[left * n2_ + right];
    if (left_real) return right - n2_ == left ? diag_a_[left] : kInfinity;
    if (right_real) return left - n1_ == right ? diag_b_[right] : kInfinity;
    return 0.0;
  }

  bool augment(std::size_t left, double r) {
    const std::size_t n = n1_ + n2_;
    for (std::size_t right = 0; right < n; ++right) {
      if (visited_[right] || cost(left, right) > r) continue;
      visited_[right] = true;
      if (match_right_[right] == kUnmatched || augment(match_right_[right], r)) {
        match_right_[right] = left;
        return true;
      }
    }
    return false;
  }

  std::size_t n1_, n2_;
  std::vector<double> cross_;
  std::vector<double> diag_a_, diag_b_;
  std::vector<std::size_t> match_right_;
  std::vector<bool> visited_;
};

std::vector<std::size_t> order_by_birth(const std::vector<PersistencePair>& points) {
  std::vector<std::size_t> idx(points.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t l, std::size_t r) { return points[l].birth < points[r].birth; });
  return idx;
}

void validate_all(const Diagram& d) {
  for (const auto& p : d.finite) {
    validate(p);
    if (p.essential()) throw std::invalid_argument("finite diagram part holds an essential point");
  }
  for (const auto& p : d.essential) {
    validate(p);
    if (!p.essential()) throw std::invalid_argument("essential diagram part holds a finite point");
  }
}

// Exhaustive search over partial injections from a into b; unmatched points
// go to the diagonal.
class BruteForce {
 public:
  BruteForce(const std::vector<PersistencePair>& a, const std::vector<PersistencePair>& b)
      : a_(a), b_(b), used_(b.size(), false) {}

  double solve() {
    best_ = kInfinity;
    recurse(0, 0.0);
    return best_;
  }

 private:
  void recurse(std::size_t i, double current) {
    if (current >= best_) return;
    if (i == a_.size()) {
      double total = current;
      for (std::size_t j = 0; j < b_.size(); ++j)
        if (!used_[j]) total = std::max(total, diagonal_cost(b_[j]));
      best_ = std::min(best_, total);
      return;
    }
    recurse(i + 1, std::max(current, diagonal_cost(a_[i])));
    for (std::size_t j = 0; j < b_.size(); ++j) {
      if (used_[j]) continue;
      used_[j] = true;
      recurse(i + 1, std::max(current, point_delta(a_[i], b_[j])));
      used_[j] = false;
    }
  }

  const std::vector<PersistencePair>& a_;
  const std::vector<PersistencePair>& b_;
  std::vector<bool> used_;
  double best_ = kInfinity;
};

double brute_essential(const std::vector<PersistencePair>& a, const std::vector<PersistencePair>& b) {
  if (a.size() != b.size()) return kInfinity;
  std::vector<std::size_t> perm(b.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  double best = a.empty() ? 0.0 : kInfinity;
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, point_delta(a[i], b[perm[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

double point_delta(const PersistencePair& p, const PersistencePair& q) {
  validate(p);
  validate(q);
  const double near = std::max(gap(p.birth, q.birth), gap(p.death, q.death));
  const double via_diagonal = std::max(gap(p.birth, p.death) / 2.0, gap(q.birth, q.death) / 2.0);
  return std::min(near, via_diagonal);
}

double diagonal_cost(const PersistencePair& p) {
  validate(p);
  return gap(p.birth, p.death) / 2.0;
}

MatchResult bottleneck(const Diagram& a, const Diagram& b) {
  validate_all(a);
  validate_all(b);
  MatchResult result;
  if (a.essential.size() != b.essential.size()) {
    result.distance = kInfinity;
    return result;
  }

  double essential_worst = 0.0;
  std::vector<MatchedPair> essential_pairs;
  const auto ea = order_by_birth(a.essential);
  const auto eb = order_by_birth(b.essential);
  for (std::size_t i = 0; i < ea.size(); ++i) {
    const double c = point_delta(a.essential[ea[i]], b.essential[eb[i]]);
    essential_worst = std::max(essential_worst, c);
    essential_pairs.push_back({ea[i], eb[i], true, c});
  }

  AugmentedMatcher matcher(a.finite, b.finite);
  const std::vector<double> candidates = matcher.candidates();
  // The largest candidate is always feasible: everything to the diagonal.
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (matcher.feasible(candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (!matcher.feasible(candidates[lo])) throw std::logic_error("bottleneck: no feasible matching");

  result.distance = std::max(candidates[lo], essential_worst);
  result.witness = matcher.pairs();
  result.witness.insert(result.witness.end(), essential_pairs.begin(), essential_pairs.end());
  return result;
}

double bottleneck_brute(const Diagram& a, const Diagram& b) {
  validate_all(a);
  validate_all(b);
  if (a.finite.size() + b.finite.size() > kBruteForceLimit ||
      a.essential.size() + b.essential.size() > kBruteForceLimit)
    throw std::invalid_argument("bottleneck_brute: diagrams exceed the brute-force size cap");
  const double essential = brute_essential(a.essential, b.essential);
  if (essential == kInfinity) return kInfinity;
  return std::max(essential, BruteForce(a.finite, b.finite).solve());
}

}  // namespace geneo
