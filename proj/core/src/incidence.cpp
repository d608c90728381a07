#include "subdivlab/incidence.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "subdivlab/errors.hpp"

namespace subdivlab {

namespace {

template <typename T>
void require_distinct(std::vector<T> items, const char* what) {
  std::sort(items.begin(), items.end());
  if (std::adjacent_find(items.begin(), items.end()) != items.end())
    throw InputError(std::string("duplicate ") + what + " in configuration");
}

template <typename Config>
Bigraph build_incidence(const Config& config) {
  require_distinct(config.points, "point");
  require_distinct(config.lines, "line");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < config.lines.size(); ++i)
    for (std::size_t j = 0; j < config.points.size(); ++j)
      if (config.lines[i].contains(config.points[j])) edges.emplace_back(i, j);
  Bigraph g(config.lines.size(), config.points.size(), std::move(edges));
  std::set<std::pair<Vertex, Vertex>> seen;
  for (Vertex v = 0; v < g.right_count(); ++v) {
    auto lines = g.right_neighbors(v);
    for (std::size_t a = 0; a < lines.size(); ++a)
      for (std::size_t b = a + 1; b < lines.size(); ++b)
        if (!seen.emplace(lines[a], lines[b]).second)
          throw StructuralError("two distinct lines share more than one point");
  }
  return g;
}

std::optional<CPoint> intersect(const CLine& l1, const CLine& l2) {
  const Complex det = l1.a() * l2.b() - l1.b() * l2.a();
  if (det.is_zero()) return std::nullopt;
  const Complex zero;
  // a z + b w = -c
  const Complex r1 = zero - l1.c();
  const Complex r2 = zero - l2.c();
  return CPoint{(r1 * l2.b() - l1.b() * r2) / det, (l1.a() * r2 - r1 * l2.a()) / det};
}

template <typename Config>
bool verify_grid_impl(const Config& config, const GridWitness& w) {
  const std::size_t s = w.L1.size();
  if (s == 0 || w.L2.size() != s || w.points.size() != s) return false;
  std::set<std::size_t> lines(w.L1.begin(), w.L1.end());
  lines.insert(w.L2.begin(), w.L2.end());
  if (lines.size() != 2 * s || *lines.rbegin() >= config.lines.size()) return false;
  std::set<std::size_t> pts;
  for (std::size_t i = 0; i < s; ++i) {
    if (w.points[i].size() != s) return false;
    for (std::size_t j = 0; j < s; ++j) {
      const std::size_t k = w.points[i][j];
      if (k >= config.points.size() || !pts.insert(k).second) return false;
      const auto& l1 = config.lines[w.L1[i]];
      const auto& l2 = config.lines[w.L2[j]];
      auto meet = intersect(l1, l2);
      if (!meet || !(*meet == config.points[k])) return false;
    }
  }
  return true;
}

template <typename Config>
std::optional<GridWitness> detect_grid_impl(const Config& config, std::uint32_t s,
                                            const SearchOptions& options) {
  if (s < 1) throw InputError("grid size s must be at least 1");
  const Bigraph g = build_incidence(config);
  const SubdividedPattern pattern({s, s});
  auto emb = find_embedding(g, pattern, options);
  if (!emb) return std::nullopt;
  GridWitness w;
  for (std::uint32_t j = 0; j < s; ++j) {
    w.L1.push_back(emb->left_map[pattern.left_index(0, j)]);
    w.L2.push_back(emb->left_map[pattern.left_index(1, j)]);
  }
  w.points.assign(s, std::vector<std::size_t>(s));
  for (std::uint32_t i = 0; i < s; ++i)
    for (std::uint32_t j = 0; j < s; ++j) {
      const std::uint32_t tuple[2] = {i, j};
      w.points[i][j] = emb->right_map[pattern.right_index(tuple)];
    }
  if (!verify_grid_impl(config, w)) throw StructuralError("grid copy failed geometric re-verification");
  return w;
}

}  // namespace

Bigraph incidence_graph(const RealConfig& config) { return build_incidence(config); }
Bigraph incidence_graph(const ComplexConfig& config) { return build_incidence(config); }

std::optional<GridWitness> detect_grid(const RealConfig& config, std::uint32_t s, const SearchOptions& options) {
  return detect_grid_impl(config, s, options);
}
std::optional<GridWitness> detect_grid(const ComplexConfig& config, std::uint32_t s,
                                       const SearchOptions& options) {
  return detect_grid_impl(config, s, options);
}

bool verify_grid(const RealConfig& config, const GridWitness& w) { return verify_grid_impl(config, w); }
bool verify_grid(const ComplexConfig& config, const GridWitness& w) { return verify_grid_impl(config, w); }

std::optional<TriangleWitness> detect_triangle(const RealConfig& config) {
  std::map<RPoint, std::size_t> index;
  for (std::size_t k = 0; k < config.points.size(); ++k) index.emplace(config.points[k], k);
  const auto& L = config.lines;
  auto lookup = [&](std::size_t i, std::size_t j) -> std::optional<std::size_t> {
    auto p = intersect(L[i], L[j]);
    if (!p) return std::nullopt;
    auto it = index.find(*p);
    if (it == index.end()) return std::nullopt;
    return it->second;
  };
  for (std::size_t a = 0; a < L.size(); ++a)
    for (std::size_t b = a + 1; b < L.size(); ++b) {
      auto ab = lookup(a, b);
      if (!ab) continue;
      for (std::size_t c = b + 1; c < L.size(); ++c) {
        auto bc = lookup(b, c);
        auto ac = lookup(a, c);
        if (!bc || !ac || *ab == *bc || *ab == *ac || *bc == *ac) continue;
        return TriangleWitness{{a, b, c}, {*bc, *ac, *ab}};
      }
    }
  return std::nullopt;
}

std::pair<Rational, Rational> threshold2incidence_exponents(std::int64_t d, const Rational& sigma) {
  const Rational denom = Rational(static_cast<long>(d)) * sigma - 1;
  if (denom == 0) throw DomainError("d * sigma = 1");
  if (d < 1 || sigma < 1) throw DomainError("need d >= 1 and sigma >= 1");
  Rational m_exp = Rational(static_cast<long>(d - 1)) * sigma / denom;
  Rational n_exp = Rational(static_cast<long>(d)) * (sigma - 1) / denom;
  m_exp.canonicalize();
  n_exp.canonicalize();
  return {m_exp, n_exp};
}

namespace {

void require_positive_s(std::int64_t s) {
  if (s < 1) throw DomainError("s must be at least 1");
}

Rational ratio(std::int64_t num, std::int64_t den) { return make_rational(num, den); }

}  // namespace

std::pair<Rational, Rational> grid2flat_exponents(std::int64_t s) {
  require_positive_s(s);
  return {ratio(2 * s - 1, 3 * s - 2), ratio(2 * s - 2, 3 * s - 2)};
}

Rational grid_total_exponent(std::int64_t s) {
  require_positive_s(s);
  Rational r = Rational(4, 3) - ratio(1, 9 * s - 6);
  r.canonicalize();
  return r;
}

Rational energy_exponent(std::int64_t s) {
  require_positive_s(s);
  return ratio(20 * s - 14, 7 * s - 4);
}

Rational distinct_distance_exponent(std::int64_t s) {
  require_positive_s(s);
  return ratio(8 * s - 2, 7 * s - 4);
}

ValidRange valid_range(std::uint64_t m, std::int64_t s) {
  require_positive_s(s);
  if (m < 1) throw DomainError("m must be at least 1");
  const BigInt mm(std::to_string(m), 10);
  ValidRange r;
  r.low = iroot_floor(mm - 1, 2) + 1;
  r.high = floor_power(mm, static_cast<std::uint64_t>(2 * s - 1), static_cast<std::uint64_t>(s));
  return r;
}

bool in_valid_range(std::uint64_t m, std::uint64_t n, std::int64_t s) {
  const ValidRange r = valid_range(m, s);
  const BigInt nn(std::to_string(n), 10);
  return r.low <= nn && nn <= r.high;
}

}  // namespace subdivlab
