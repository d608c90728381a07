#include "subdivlab/distances.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "subdivlab/errors.hpp"
#include "subdivlab/rng.hpp"

namespace subdivlab {

void require_distinct_points(const PointSet& points) {
  PointSet sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("duplicate point in point set");
}

Rational squared_distance(const RPoint& a, const RPoint& b) {
  const Rational dx = a.x - b.x;
  const Rational dy = a.y - b.y;
  return dx * dx + dy * dy;
}

namespace {

// Class id per ordered pair: 0 for zero distance, 1.. for the distinct
// positive squared distances in ascending order.
struct DistanceTable {
  std::size_t n = 0;
  std::vector<std::uint32_t> id;
  std::vector<Rational> value;  // value[k] is the squared distance of class k

  explicit DistanceTable(const PointSet& points) : n(points.size()), id(n * n, 0) {
    std::map<Rational, std::uint32_t> classes;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) classes.emplace(squared_distance(points[a], points[b]), 0);
    value.push_back(Rational(0));
    for (auto& [d, k] : classes) {
      k = static_cast<std::uint32_t>(value.size());
      value.push_back(d);
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        id[a * n + b] = id[b * n + a] = classes.at(squared_distance(points[a], points[b]));
  }
  std::uint32_t operator()(std::size_t a, std::size_t b) const { return id[a * n + b]; }
  std::size_t class_count() const { return value.size(); }
};

std::size_t distinct_in(const DistanceTable& table, const std::vector<std::uint32_t>& subset,
                        std::vector<char>& mark) {
  std::size_t count = 0;
  std::vector<std::uint32_t> touched;
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      const std::uint32_t k = table(subset[i], subset[j]);
      if (!mark[k]) {
        mark[k] = 1;
        touched.push_back(k);
        ++count;
      }
    }
  for (auto k : touched) mark[k] = 0;
  return count;
}

}  // namespace

std::size_t distinct_distance_count(const PointSet& points) {
  std::vector<std::uint32_t> all(points.size());
  std::iota(all.begin(), all.end(), 0u);
  return distinct_distance_count(points, all);
}

std::size_t distinct_distance_count(const PointSet& points, const std::vector<std::uint32_t>& subset) {
  for (auto k : subset)
    if (k >= points.size()) throw InputError("subset index out of range");
  std::vector<Rational> seen;
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      seen.push_back(squared_distance(points[subset[i]], points[subset[j]]));
  std::sort(seen.begin(), seen.end());
  return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

LocalConditionReport check_local_condition(const PointSet& points, std::uint32_t p, std::int64_t q,
                                           std::uint64_t subset_budget) {
  require_distinct_points(points);
  if (p > points.size()) throw InputError("p exceeds the number of points");
  LocalConditionReport report;
  if (q <= 0) return report;
  std::uint64_t subsets = 0;
  try {
    subsets = binomial(points.size(), p);
  } catch (const CapacityError&) {
    subsets = ~std::uint64_t{0};
  }
  if (subsets > subset_budget) throw BudgetError("C(|P|, p) exceeds the subset budget");
  const DistanceTable table(points);
  std::vector<char> mark(table.class_count(), 0);
  std::vector<std::uint32_t> subset(p);
  std::iota(subset.begin(), subset.end(), 0u);
  const auto n = static_cast<std::uint32_t>(points.size());
  for (;;) {
    if (static_cast<std::int64_t>(distinct_in(table, subset, mark)) < q) {
      report.holds = false;
      report.violating_subset = subset;
      return report;
    }
    // Next p-subset in lexicographic order.
    std::int64_t i = static_cast<std::int64_t>(p) - 1;
    while (i >= 0 && subset[i] == n - p + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) break;
    ++subset[i];
    for (std::size_t k = i + 1; k < p; ++k) subset[k] = subset[k - 1] + 1;
  }
  return report;
}

EnergyReport energy(const PointSet& points) {
  if (points.empty()) throw InputError("energy needs at least one point");
  std::map<Rational, std::uint64_t> counts;
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = 0; b < points.size(); ++b)
      if (a != b) ++counts[squared_distance(points[a], points[b])];
  EnergyReport r;
  for (auto& [d, c] : counts) {
    r.classes.push_back({d, c});
    r.energy += c * c;
  }
  return r;
}

std::uint64_t energy_bruteforce(const PointSet& points) {
  const std::size_t n = points.size();
  std::vector<Rational> d2(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) d2[a * n + b] = squared_distance(points[a], points[b]);
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Rational& ac = d2[a * n + c];
        if (ac == 0) continue;
        for (std::size_t d = 0; d < n; ++d)
          if (ac == d2[b * n + d]) ++count;
      }
  return count;
}

std::int64_t q_formula(std::int64_t p, std::int64_t s) {
  if (p < 1 || s < 1) throw InputError("q_formula needs p, s >= 1");
  return p * (p - 1) / 2 - p + 3 * (p / (2 * s)) + 2 * s + 2;
}

LiftedSystem lift(const PointSet& points, std::uint64_t seed) {
  if (points.size() < 2) throw InputError("lift needs at least two points");
  require_distinct_points(points);
  const std::size_t n = points.size();
  const std::size_t total = n * n;

  std::vector<std::uint32_t> order(total);
  std::iota(order.begin(), order.end(), 0u);
  Rng rng(seed);
  for (std::size_t i = total - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
  const std::size_t first = (total + 1) / 2;
  std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(first));
  std::sort(order.begin() + static_cast<std::ptrdiff_t>(first), order.end());

  LiftedSystem sys;
  sys.points = points;
  sys.seed = seed;
  auto to_pair = [n](std::uint32_t k) {
    return OrderedPair{static_cast<std::uint32_t>(k / n), static_cast<std::uint32_t>(k % n)};
  };
  for (std::size_t i = 0; i < total; ++i) (i < first ? sys.lifted : sys.quadrics).push_back(to_pair(order[i]));

  const DistanceTable table(points);
  std::vector<Rational> d2(total);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) d2[a * n + b] = squared_distance(points[a], points[b]);

  std::vector<Edge> edges;
  for (std::size_t j = 0; j < sys.quadrics.size(); ++j) {
    const auto [c, d] = sys.quadrics[j];
    for (std::size_t i = 0; i < sys.lifted.size(); ++i) {
      const auto [a, b] = sys.lifted[i];
      // Q_{c,d} evaluated at v_{a,b}.
      const bool on_quadric = d2[a * n + c] == d2[b * n + d];
      if (on_quadric != (table(a, c) == table(b, d)))
        throw StructuralError("quadric incidence disagrees with |ac| = |bd|");
      if (!on_quadric) continue;
      if (a == c || b == d) throw StructuralError("incidence with a = c or b = d");
      edges.emplace_back(static_cast<Vertex>(j), static_cast<Vertex>(i));
    }
  }
  sys.graph = Bigraph(sys.quadrics.size(), sys.lifted.size(), std::move(edges));
  return sys;
}

const char* to_string(Orientation o) {
  return o == Orientation::quadrics_left ? "quadrics-left" : "points-left";
}

}  // namespace subdivlab
