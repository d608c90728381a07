#include "subdivlab/bigraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "subdivlab/errors.hpp"
#include "subdivlab/matching.hpp"

namespace subdivlab {

Bigraph::Bigraph(std::size_t left_count, std::size_t right_count, std::vector<Edge> edges)
    : left_(left_count), right_(right_count), edge_count_(edges.size()) {
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if (u >= left_count || v >= right_count)
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for a " + std::to_string(left_count) + "x" +
                       std::to_string(right_count) + " graph");
    if (i > 0 && edges[i - 1] == edges[i])
      throw InputError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    left_[u].push_back(v);
    right_[v].push_back(u);
  }
}

Bigraph Bigraph::complete(std::size_t left_count, std::size_t right_count) {
  std::vector<Edge> edges;
  edges.reserve(left_count * right_count);
  for (std::size_t u = 0; u < left_count; ++u)
    for (std::size_t v = 0; v < right_count; ++v)
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Bigraph(left_count, right_count, std::move(edges));
}

std::size_t Bigraph::max_degree(Side side) const {
  const auto& lists = side == Side::left ? left_ : right_;
  std::size_t best = 0;
  for (const auto& l : lists) best = std::max(best, l.size());
  return best;
}

bool Bigraph::has_edge(Vertex u, Vertex v) const {
  if (u >= left_count() || v >= right_count()) return false;
  const auto& l = left_[u];
  return std::binary_search(l.begin(), l.end(), v);
}

std::vector<Edge> Bigraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < left_.size(); ++u)
    for (Vertex v : left_[u]) out.emplace_back(static_cast<Vertex>(u), v);
  return out;
}

namespace {

std::vector<std::int64_t> index_map(std::span<const Vertex> subset, std::size_t universe,
                                    const char* side) {
  std::vector<std::int64_t> pos(universe, -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    Vertex x = subset[i];
    if (x >= universe)
      throw InputError(std::string(side) + " vertex " + std::to_string(x) + " out of range");
    if (pos[x] != -1)
      throw InputError(std::string(side) + " vertex " + std::to_string(x) + " repeated in subset");
    pos[x] = static_cast<std::int64_t>(i);
  }
  return pos;
}

}  // namespace

Bigraph Bigraph::induced_subgraph(std::span<const Vertex> left_subset,
                                  std::span<const Vertex> right_subset) const {
  auto lpos = index_map(left_subset, left_count(), "left");
  auto rpos = index_map(right_subset, right_count(), "right");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < left_subset.size(); ++i)
    for (Vertex v : left_[left_subset[i]])
      if (rpos[v] >= 0) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(rpos[v]));
  return Bigraph(left_subset.size(), right_subset.size(), std::move(edges));
}

Bigraph Bigraph::transposed() const {
  Bigraph t;
  t.left_ = right_;
  t.right_ = left_;
  t.edge_count_ = edge_count_;
  return t;
}

std::vector<Vertex> common_neighborhood(const Bigraph& g, std::span<const Vertex> subset) {
  if (subset.empty()) throw InputError("common_neighborhood needs a nonempty vertex set");
  for (Vertex u : subset)
    if (u >= g.left_count()) throw InputError("left vertex " + std::to_string(u) + " out of range");
  auto first = g.left_neighbors(subset[0]);
  std::vector<Vertex> acc(first.begin(), first.end());
  std::vector<Vertex> next;
  for (std::size_t i = 1; i < subset.size() && !acc.empty(); ++i) {
    auto nb = g.left_neighbors(subset[i]);
    next.clear();
    std::set_intersection(acc.begin(), acc.end(), nb.begin(), nb.end(), std::back_inserter(next));
    acc.swap(next);
  }
  return acc;
}

const char* to_string(WeightClass c) {
  switch (c) {
    case WeightClass::zero: return "zero";
    case WeightClass::light: return "light";
    case WeightClass::heavy: return "heavy";
  }
  return "?";
}

namespace {

void check_st(int s, int t) {
  if (s < 1 || t < 1) throw InputError("s and t must be at least 1");
}

WeightClass classify(std::uint64_t weight, std::uint64_t threshold) {
  if (weight == 0) return WeightClass::zero;
  return weight < threshold ? WeightClass::light : WeightClass::heavy;
}

// Calls f(u, x, weight) for every left pair u < x with positive weight.
template <typename F>
void for_each_weighted_pair(const Bigraph& g, F&& f) {
  std::vector<std::uint32_t> count(g.left_count(), 0);
  std::vector<Vertex> touched;
  for (Vertex u = 0; u < g.left_count(); ++u) {
    touched.clear();
    for (Vertex w : g.left_neighbors(u))
      for (Vertex x : g.right_neighbors(w))
        if (x > u && count[x]++ == 0) touched.push_back(x);
    std::sort(touched.begin(), touched.end());
    for (Vertex x : touched) {
      f(u, x, std::uint64_t{count[x]});
      count[x] = 0;
    }
  }
}

}  // namespace

PairWeightReport pair_weight(const Bigraph& g, Vertex u, Vertex v, int s, int t) {
  check_st(s, t);
  if (u == v) throw InputError("pair_weight needs two distinct left vertices");
  const Vertex pair[2] = {u, v};
  PairWeightReport r;
  r.u = std::min(u, v);
  r.v = std::max(u, v);
  r.weight = common_neighborhood(g, pair).size();
  r.threshold = binomial(static_cast<std::uint64_t>(s + t), 2);
  r.weight_class = classify(r.weight, r.threshold);
  return r;
}

TotalWeightReport total_weight(const Bigraph& g) {
  if (g.right_count() == 0) throw InputError("total_weight needs at least one right vertex");
  TotalWeightReport r;
  for_each_weighted_pair(g, [&](Vertex, Vertex, std::uint64_t w) { r.total += w; });
  const BigInt e(std::to_string(g.edge_count()), 10);
  const BigInt n(std::to_string(g.right_count()), 10);
  r.jensen_lower = Rational(e * e, 4 * n);
  r.jensen_lower.canonicalize();
  r.jensen_applicable = g.edge_count() >= 2 * g.right_count();
  if (r.jensen_applicable)
    r.jensen_holds = Rational(BigInt(std::to_string(r.total), 10)) >= r.jensen_lower;
  return r;
}

LightEdgeReport light_edge_claim_check(const Bigraph& g, int s, int t) {
  check_st(s, t);
  const std::uint64_t threshold = binomial(static_cast<std::uint64_t>(s + t), 2);
  LightEdgeReport r;
  for_each_weighted_pair(g, [&](Vertex, Vertex, std::uint64_t w) {
    r.total += w;
    if (w < threshold) ++r.light_count;
  });
  const std::uint64_t k = static_cast<std::uint64_t>(s + t + 1);
  const BigInt total(std::to_string(r.total), 10);
  r.hypothesis_met = total >= BigInt(std::to_string(8 * k * k * g.right_count()), 10);
  r.required = Rational(total, BigInt(std::to_string(4 * k * k * k), 10));
  r.required.canonicalize();
  r.count_meets_required = Rational(BigInt(std::to_string(r.light_count), 10)) >= r.required;
  return r;
}

std::vector<Vertex> nprime_neighborhood(const Bigraph& g, std::span<const Vertex> u_list) {
  if (u_list.empty()) throw InputError("nprime_neighborhood needs at least one vertex");
  std::vector<char> in_list(g.left_count(), 0);
  for (Vertex u : u_list) {
    if (u >= g.left_count()) throw InputError("left vertex " + std::to_string(u) + " out of range");
    if (in_list[u]) throw InputError("duplicate vertex " + std::to_string(u) + " in u_list");
    in_list[u] = 1;
  }
  std::vector<Vertex> result;
  std::vector<std::vector<Vertex>> slots(u_list.size());
  for (Vertex x = 0; x < g.left_count(); ++x) {
    if (in_list[x]) continue;
    auto nx = g.left_neighbors(x);
    bool feasible = true;
    for (std::size_t i = 0; i < u_list.size() && feasible; ++i) {
      auto nu = g.left_neighbors(u_list[i]);
      slots[i].clear();
      std::set_intersection(nu.begin(), nu.end(), nx.begin(), nx.end(), std::back_inserter(slots[i]));
      feasible = !slots[i].empty();
    }
    if (feasible && has_distinct_representatives(slots)) result.push_back(x);
  }
  return result;
}

std::vector<Vertex> top_k_by_degree(const Bigraph& g, Side side, std::size_t k,
                                    std::optional<std::span<const Vertex>> restricted_to) {
  std::vector<Vertex> pool;
  if (restricted_to) {
    pool.assign(restricted_to->begin(), restricted_to->end());
    for (Vertex x : pool)
      if (x >= g.size(side)) throw InputError("vertex " + std::to_string(x) + " out of range");
  } else {
    pool.resize(g.size(side));
    std::iota(pool.begin(), pool.end(), Vertex{0});
  }
  if (k > pool.size())
    throw InputError("top_k_by_degree: k=" + std::to_string(k) + " exceeds " +
                     std::to_string(pool.size()) + " candidates");
  auto better = [&](Vertex a, Vertex b) {
    auto da = g.degree(side, a), db = g.degree(side, b);
    return da != db ? da > db : a < b;
  };
  std::partial_sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k), pool.end(), better);
  pool.resize(k);
  return pool;
}

}  // namespace subdivlab
