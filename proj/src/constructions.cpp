#include "repnum/constructions.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "repnum/errors.hpp"

namespace repnum::constructions {

namespace {

using Float = boost::multiprecision::cpp_bin_float_50;

std::vector<int> random_subset(int n, std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::vector<int> vertices(static_cast<std::size_t>(n));
  std::iota(vertices.begin(), vertices.end(), 0);
  std::shuffle(vertices.begin(), vertices.end(), rng);
  const int size = std::uniform_int_distribution<int>(1, n)(rng);
  vertices.resize(static_cast<std::size_t>(size));
  std::sort(vertices.begin(), vertices.end());
  return vertices;
}

int induced_rep(const SimpleGraph& g, const std::vector<int>& keep) {
  std::vector<int> count(keep.size(), 0);
  int best = 0;
  for (int v : keep) {
    int d = 0;
    for (int u : keep) d += g.adjacent(v, u) ? 1 : 0;
    best = std::max(best, ++count[static_cast<std::size_t>(d)]);
  }
  return best;
}

}  // namespace

SimpleGraph antiregular(int n) {
  if (n < 2) throw ContractError("antiregular needs n >= 2");
  SimpleGraph g(n);
  for (int v = 1; v < n; ++v) {
    if ((n - 1 - v) % 2 == 0) {
      for (int u = 0; u < v; ++u) g.set_edge(u, v);
    }
  }
  return sort_by_degree(g);
}

SimpleGraph sort_by_degree(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
  SimpleGraph out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)])) out.set_edge(i, j);
    }
  }
  return out;
}

std::int64_t clique_size(int n, int i) {
  if (n < 3 || i < 1) throw ContractError("clique_size needs n >= 3 and i >= 1");
  const Float ratio = Float(2 * n) / (Float(i) * boost::multiprecision::log(Float(n)));
  const Float up = boost::multiprecision::ceil(ratio);
  // The ratio is never an integer (ln n is irrational), so a wide gap to
  // the nearest integer certifies the ceiling.
  const Float gap = std::min(Float(up - ratio), Float(ratio - (up - 1)));
  if (!(gap > Float("1e-40"))) throw InvariantError("clique_size: cannot certify the ceiling");
  return up.convert_to<std::int64_t>();
}

DnGraph dn_graph(int n) {
  if (n < 3) throw ContractError("dn_graph needs n >= 3");
  DnPlan plan;
  plan.n = n;
  std::int64_t used = 0;
  for (int i = 1;; ++i) {
    const std::int64_t a = clique_size(n, i);
    if (used + a > n) break;
    used += a;
    plan.clique_sizes.push_back(static_cast<int>(a));
  }
  plan.isolated = n - static_cast<int>(used);

  const auto s = static_cast<std::int64_t>(plan.clique_sizes.size());
  std::int64_t root = 0;
  while (root * root < n) ++root;
  if (s > root) throw InvariantError("dn_graph: more than ceil(sqrt n) cliques");
  if (plan.isolated > clique_size(n, 1)) throw InvariantError("dn_graph: more than a_1 isolated vertices");

  SimpleGraph g(n);
  int next = 0;
  for (int a : plan.clique_sizes) {
    for (int u = next; u < next + a; ++u) {
      for (int v = u + 1; v < next + a; ++v) g.set_edge(u, v);
    }
    next += a;
  }
  return {std::move(g), std::move(plan)};
}

Blowup blowup(const SimpleGraph& base, int q) {
  if (q < 3) throw ContractError("blowup needs q >= 3");
  const int n = base.order();
  if (n < 2) throw ContractError("blowup needs a base graph with at least 2 vertices");
  BlowupPlan plan;
  plan.base_order = n;
  plan.q = q;
  for (int v = 0; v < n; ++v) plan.base_degrees.push_back(base.degree(v));
  if (!std::is_sorted(plan.base_degrees.begin(), plan.base_degrees.end())) {
    throw ContractError("blowup needs base vertices labelled by non-decreasing degree");
  }
  const DnGraph inner = dn_graph(q);
  plan.inner = inner.plan;

  SimpleGraph g(n * q);
  for (int i = 0; i < n; ++i) {
    for (int x = 0; x < q; ++x) {
      for (int y = x + 1; y < q; ++y) {
        if (inner.graph.adjacent(x, y)) g.set_edge(i * q + x, i * q + y);
      }
    }
    for (int j = i + 1; j < n; ++j) {
      if (!base.adjacent(i, j)) continue;
      for (int x = 0; x < q; ++x) {
        for (int y = 0; y < q; ++y) g.set_edge(i * q + x, j * q + y);
      }
    }
  }

  for (int i = 0; i < n; ++i) {
    const std::int64_t lo = static_cast<std::int64_t>(q) * plan.base_degrees[static_cast<std::size_t>(i)];
    for (int x = 0; x < q; ++x) {
      const int d = g.degree(i * q + x);
      if (d < lo || d >= lo + q) throw InvariantError("blowup: degree outside [q deg, q (deg + 1))");
    }
  }
  return {std::move(g), std::move(plan)};
}

SampleResult sample_induced_rep(const SimpleGraph& g, int samples, std::uint64_t seed) {
  SampleResult out;
  if (g.order() == 0) return out;
  for (int s = 0; s < samples; ++s) {
    auto subset = random_subset(g.order(), seed, static_cast<std::uint64_t>(s));
    const int r = induced_rep(g, subset);
    if (r > out.max_rep) out = {r, std::move(subset)};
  }
  return out;
}

SampleResult sample_induced_rep_parallel(const SimpleGraph& g, int samples, std::uint64_t seed,
                                         int jobs) {
  if (g.order() == 0 || samples <= 0) return {};
  std::vector<int> reps(static_cast<std::size_t>(samples));
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();

#pragma omp parallel for schedule(static) num_threads(threads)
  for (int s = 0; s < samples; ++s) {
    reps[static_cast<std::size_t>(s)] = induced_rep(g, random_subset(g.order(), seed, static_cast<std::uint64_t>(s)));
  }

  // first sample attaining the maximum, as in the serial scan
  const auto best = std::max_element(reps.begin(), reps.end()) - reps.begin();
  return {reps[static_cast<std::size_t>(best)], random_subset(g.order(), seed, static_cast<std::uint64_t>(best))};
}

nlohmann::json to_json(const DnPlan& plan) {
  return {{"n", plan.n}, {"clique_sizes", plan.clique_sizes}, {"isolated", plan.isolated}};
}

nlohmann::json to_json(const BlowupPlan& plan) {
  return {{"base_order", plan.base_order},
          {"q", plan.q},
          {"vertices", plan.base_order * plan.q},
          {"base_degrees", plan.base_degrees},
          {"inner", to_json(plan.inner)}};
}

}  // namespace repnum::constructions
