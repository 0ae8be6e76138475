#include "geneo/persistence.hpp"

#include <algorithm>
#include <numeric>

namespace geneo {
namespace {

// Union-find whose roots carry the index of their component's oldest vertex.
class Components {
 public:
  explicit Components(std::size_t n) : parent_(n), oldest_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    std::iota(oldest_.begin(), oldest_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  // Attaches root `young` under root `old`.
  void attach(std::size_t young, std::size_t old) { parent_[young] = old; }
  std::size_t oldest(std::size_t root) const { return oldest_[root]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> oldest_;
};

}  // namespace

Diagram Diagram::sorted() const {
  Diagram out = *this;
  auto by_coords = [](const PersistencePair& l, const PersistencePair& r) {
    return l.birth < r.birth || (l.birth == r.birth && l.death < r.death);
  };
  std::sort(out.finite.begin(), out.finite.end(), by_coords);
  std::sort(out.essential.begin(), out.essential.end(), by_coords);
  return out;
}

Diagram sublevel_pd0(std::span<const double> values) {
  const std::size_t n = values.size();
  Diagram diagram;
  if (n == 0) return diagram;

  // Filtration order: by value, then by index. Position in this order is the
  // vertex's age; a smaller rank is older.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return values[l] < values[r] || (values[l] == values[r] && l < r);
  });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;

  Components uf(n);
  std::vector<bool> present(n, false);
  for (const std::size_t v : order) {
    present[v] = true;
    for (const std::size_t u : {v - 1, v + 1}) {
      if (u >= n || !present[u]) continue;  // v - 1 wraps for v == 0
      std::size_t ru = uf.find(u);
      std::size_t rv = uf.find(v);
      if (ru == rv) continue;
      // The root's stored oldest vertex is the component minimum.
      if (rank[uf.oldest(ru)] > rank[uf.oldest(rv)]) std::swap(ru, rv);
      // ru is elder; rv dies at the current value.
      const double birth = values[uf.oldest(rv)];
      const double death = values[v];
      if (death > birth) diagram.finite.push_back({birth, death});
      uf.attach(rv, ru);
    }
  }
  diagram.essential.push_back({values[order.front()], kInfinity});
  return diagram;
}

Diagram sublevel_pd0(const Signal& s) { return sublevel_pd0(s.values()); }

}  // namespace geneo
