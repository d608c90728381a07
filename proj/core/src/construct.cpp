#include "subdivlab/construct.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "subdivlab/errors.hpp"
#include "subdivlab/parallel.hpp"
#include "subdivlab/rng.hpp"

namespace subdivlab {

namespace {

BigInt big(std::uint64_t x) { return BigInt(std::to_string(x), 10); }

void check_parameters(std::uint64_t m, std::uint64_t n, std::uint32_t s, std::uint32_t t,
                      const Rational& epsilon) {
  if (s < 1 || s > t) throw InputError("construction needs 1 <= s <= t");
  if (m < 1 || n < 1) throw InputError("construction needs m, n >= 1");
  if (epsilon <= 0) throw InputError("epsilon must be positive");
}

// n <= m^{2 - 1/s - 1/t}  <=>  n^{st} <= m^{2st - s - t}.
bool in_regime(std::uint64_t m, std::uint64_t n, std::uint32_t s, std::uint32_t t) {
  const std::uint64_t st = std::uint64_t{s} * t;
  return ipow(big(n), st) <= ipow(big(m), 2 * st - s - t);
}

}  // namespace

double edge_probability(std::uint64_t m, std::uint64_t n, std::uint32_t s, std::uint32_t t,
                        const Rational& epsilon) {
  if (epsilon <= 0) throw InputError("epsilon must be positive");
  if (s < 1 || t < 1) throw InputError("s and t must be positive");
  const double st = static_cast<double>(s) * t;
  const double log_p = (std::log(to_double(epsilon)) +
                        (1.0 - s - static_cast<double>(t)) * std::log(static_cast<double>(m)) -
                        st * std::log(static_cast<double>(n))) /
                       (2.0 * st - 1.0);
  return std::min(1.0, std::exp(log_p));
}

Construction random_lower_bound_graph(std::uint64_t m, std::uint64_t n, std::uint32_t s,
                                      std::uint32_t t, const Rational& epsilon, std::uint64_t seed,
                                      const ConstructionOptions& options) {
  check_parameters(m, n, s, t, epsilon);
  const double p = edge_probability(m, n, s, t, epsilon);
  if (!(p > 0.0)) throw InputError("edge probability underflows to zero");

  ConstructionReport report;
  report.m = m;
  report.n = n;
  report.s = s;
  report.t = t;
  report.epsilon = epsilon;
  report.p = Rational(p);
  report.seed = seed;
  report.in_regime = in_regime(m, n, s, t);
  const double st = static_cast<double>(s) * t;
  report.expected_copies_bound =
      std::exp((s + static_cast<double>(t)) * std::log(static_cast<double>(m)) +
               st * std::log(static_cast<double>(n)) + 2.0 * st * std::log(p));

  Rng rng(seed);
  const std::uint64_t threshold = Rng::bernoulli_threshold(p);
  std::vector<Edge> edges;
  for (std::uint64_t u = 0; u < m; ++u)
    for (std::uint64_t v = 0; v < n; ++v)
      if (rng.bernoulli(threshold)) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  report.edges_before = edges.size();

  const SubdividedPattern pattern = SubdividedPattern::complete_bipartite(s, t);
  Bigraph g(m, n, edges);
  if (options.count_embeddings_before) {
    try {
      report.embeddings_before = count_embeddings(g, pattern, options.search);
    } catch (const BudgetError&) {
    }
  }
  for (;;) {
    std::optional<Embedding> copy;
    try {
      copy = find_embedding(g, pattern, options.search);
    } catch (const BudgetError&) {
      report.certified = false;
      break;
    }
    if (!copy) break;
    const Vertex victim = *std::min_element(copy->left_map.begin(), copy->left_map.end());
    std::erase_if(edges, [victim](const Edge& e) { return e.first == victim; });
    ++report.copies_found;
    ++report.deleted_left;
    g = Bigraph(m, n, edges);
  }
  report.edges_after = g.edge_count();
  return {std::move(g), std::move(report)};
}

KstCertificate kst_certificate(const Bigraph& g, std::uint32_t s, std::uint32_t t) {
  if (s < 1 || t < 1) throw InputError("kst_certificate needs s, t >= 1");
  KstCertificate c;
  c.lhs = 0;
  for (Vertex v = 0; v < g.right_count(); ++v) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), g.degree(Side::right, v), s);
    c.lhs += b;
  }
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), g.left_count(), s);
  c.rhs = BigInt(t - 1) * b;
  c.holds = c.lhs <= c.rhs;
  return c;
}

namespace {

class ExtremalSearch {
 public:
  ExtremalSearch(std::uint64_t m, std::uint64_t n, const SubdividedPattern& pattern, std::uint64_t budget)
      : m_(m), n_(n), pattern_(pattern), budget_(budget) {}

  ExtremalResult run() {
    ExtremalResult r;
    const std::uint64_t total = m_ * n_;
    if (pattern_.left_size() > m_ || pattern_.right_size() > n_) {
      r.lower = r.upper = total;
      r.exact = true;
      for (std::uint64_t u = 0; u < m_; ++u)
        for (std::uint64_t v = 0; v < n_; ++v) r.best_edges.emplace_back(u, v);
      return r;
    }
    try {
      dfs(0);
      r.exact = true;
    } catch (const BudgetError&) {
    }
    r.lower = best_.size();
    r.upper = r.exact ? r.lower : total;
    r.best_edges = best_;
    return r;
  }

 private:
  void dfs(std::uint64_t index) {
    if (++nodes_ > budget_) throw BudgetError("brute_extremal node budget exhausted");
    const std::uint64_t total = m_ * n_;
    // The empty graph is always feasible, so only strict improvements matter.
    if (current_.size() + (total - index) <= best_.size()) return;
    if (index == total) {
      best_ = current_;
      return;
    }
    const Edge e(static_cast<Vertex>(index / n_), static_cast<Vertex>(index % n_));
    current_.push_back(e);
    if (!find_embedding(Bigraph(m_, n_, current_), pattern_)) dfs(index + 1);
    current_.pop_back();
    dfs(index + 1);
  }

  std::uint64_t m_, n_;
  const SubdividedPattern& pattern_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Edge> current_;
  std::vector<Edge> best_;
};

}  // namespace

ExtremalResult brute_extremal(std::uint64_t m, std::uint64_t n, const SubdividedPattern& pattern,
                              std::uint64_t node_budget) {
  if (m < 1 || n < 1) throw InputError("brute_extremal needs m, n >= 1");
  return ExtremalSearch(m, n, pattern, node_budget).run();
}

std::vector<ScanRow> threshold_scan(std::uint32_t s, std::uint32_t t, const Rational& exponent,
                                    const std::vector<std::uint64_t>& m_list, std::uint64_t trials,
                                    std::uint64_t seed, const Rational& epsilon,
                                    const SearchOptions& search) {
  if (s < 1 || s > t) throw InputError("threshold_scan needs 1 <= s <= t");
  const Rational limit = Rational(2) - Rational(1, s) - Rational(1, t);
  if (!(exponent > 0 && exponent < limit))
    throw InputError("threshold_scan needs 0 < exponent < 2 - 1/s - 1/t = " + to_string(limit));
  for (auto m : m_list)
    if (m < 1) throw InputError("threshold_scan needs m >= 1");

  std::vector<ScanRow> rows(m_list.size() * trials);
  for (std::size_t i = 0; i < m_list.size(); ++i) {
    const std::uint64_t m = m_list[i];
    const std::uint64_t n = floor_power(big(m), exponent.get_num().get_ui(), exponent.get_den().get_ui()).get_ui();
    if (n < 1) throw InputError("floor(m^exponent) is zero for m = " + std::to_string(m));
    for (std::uint64_t k = 0; k < trials; ++k) {
      ScanRow& row = rows[i * trials + k];
      row.m = m;
      row.n = n;
      row.s = s;
      row.t = t;
      row.exponent = exponent;
      row.trial = k;
      row.seed = derive_seed(derive_seed(seed, m), k);
    }
  }
  ConstructionOptions options;
  options.search = search;
  parallel_for(rows.size(), [&](std::size_t i) {
    ScanRow& row = rows[i];
    Construction c = random_lower_bound_graph(row.m, row.n, s, t, epsilon, row.seed, options);
    row.p = c.report.p;
    row.edges_before = c.report.edges_before;
    row.copies = c.report.copies_found;
    row.edges_after = c.report.edges_after;
    row.ratio = Rational(big(row.edges_after), big(row.n));
    row.ratio.canonicalize();
    row.certified = c.report.certified;
  });
  return rows;
}

std::vector<ScanSummary> summarize(const std::vector<ScanRow>& rows) {
  std::vector<ScanSummary> out;
  std::map<std::uint64_t, std::size_t> slot;
  std::vector<Rational> sums;
  for (const auto& row : rows) {
    auto [it, inserted] = slot.try_emplace(row.m, out.size());
    if (inserted) {
      out.push_back({row.m, row.n, 0, 0});
      sums.emplace_back(0);
    }
    out[it->second].trials++;
    sums[it->second] += row.ratio;
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i].mean_ratio = to_double(sums[i]) / static_cast<double>(out[i].trials);
  return out;
}

}  // namespace subdivlab
