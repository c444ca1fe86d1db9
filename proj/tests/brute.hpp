#pragma once

// Slow, obviously-correct checks used as ground truth in tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "repnum/graph.hpp"
#include "repnum/zerosum.hpp"

namespace brute {

inline int max_multiplicity(const std::vector<std::int64_t>& values) {
  std::map<std::int64_t, int> count;
  int best = 0;
  for (auto v : values) best = std::max(best, ++count[v]);
  return best;
}

inline std::vector<std::int64_t> degrees(const repnum::SimpleGraph& g) {
  std::vector<std::int64_t> d(g.order(), 0);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v)
      if (u != v && g.adjacent(u, v)) ++d[u];
  return d;
}

// Min deletions to leave min(k, survivors) vertices of one degree, by
// trying every vertex subset (n <= 20).
inline int min_deletions(const repnum::SimpleGraph& g, int k) {
  const int n = g.order();
  int best = n;
  for (std::uint32_t keep = 0; keep < (1u << n); ++keep) {
    const int survivors = __builtin_popcount(keep);
    if (n - survivors >= best) continue;
    std::vector<std::int64_t> deg;
    for (int u = 0; u < n; ++u) {
      if (!(keep >> u & 1)) continue;
      int d = 0;
      for (int v = 0; v < n; ++v)
        if (v != u && (keep >> v & 1) && g.adjacent(u, v)) ++d;
      deg.push_back(d);
    }
    if (survivors == 0 || max_multiplicity(deg) >= std::min(k, survivors)) best = n - survivors;
  }
  return best;
}

// Is there a permutation whose prefix sums stay within `bound` (n <= 8)?
inline bool steinitz_order_exists(const repnum::zerosum::IntVecSeq& seq, std::int64_t bound) {
  std::vector<std::size_t> p(seq.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    std::vector<std::int64_t> s(seq.dim(), 0);
    bool ok = true;
    for (auto i : p) {
      for (int c = 0; c < seq.dim(); ++c) {
        s[c] += seq[i][c];
        if (s[c] > bound || s[c] < -bound) ok = false;
      }
      if (!ok) break;
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Some nonempty proper subset summing to zero (n <= 20)?
inline bool zero_sum_subset_exists(const repnum::zerosum::IntVecSeq& seq) {
  const std::size_t n = seq.size();
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    bool zero = true;
    for (int c = 0; c < seq.dim() && zero; ++c) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) s += seq[i][c];
      zero = s == 0;
    }
    if (zero) return true;
  }
  return false;
}

inline std::vector<std::int64_t> sum_of(const repnum::zerosum::IntVecSeq& seq,
                                        const std::vector<std::size_t>& idx) {
  std::vector<std::int64_t> s(seq.dim(), 0);
  for (auto i : idx)
    for (int c = 0; c < seq.dim(); ++c) s[c] += seq[i][c];
  return s;
}

inline repnum::SimpleGraph random_graph(int n, double p, std::mt19937_64& rng) {
  repnum::SimpleGraph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.set_edge(u, v);
  return g;
}

inline repnum::WeightedCompleteGraph random_weighted(int n, int r, std::mt19937_64& rng) {
  repnum::WeightedCompleteGraph g(n, r);
  std::uniform_int_distribution<int> w(0, r);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.set_weight(u, v, w(rng));
  return g;
}

// n random vectors in [-r,r]^d, entries nudged until the total equals
// `target` (needs |target_c| <= n*r).
inline repnum::zerosum::IntVecSeq random_seq_with_sum(int d, std::int64_t r, std::size_t n,
                                                      const std::vector<std::int64_t>& target,
                                                      std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> e(-r, r);
  std::vector<std::int64_t> flat(n * d);
  for (auto& x : flat) x = e(rng);
  for (int c = 0; c < d; ++c) {
    std::int64_t s = -target[c];
    for (std::size_t i = 0; i < n; ++i) s += flat[i * d + c];
    for (std::size_t i = 0; i < n && s != 0; ++i) {
      auto& x = flat[i * d + c];
      const std::int64_t room = s > 0 ? x + r : r - x;
      const std::int64_t take = std::min(room, s > 0 ? s : -s);
      x += s > 0 ? -take : take;
      s += s > 0 ? -take : take;
    }
  }
  return repnum::zerosum::IntVecSeq(d, r, std::move(flat));
}

inline repnum::zerosum::IntVecSeq random_zero_sum(int d, std::int64_t r, std::size_t n,
                                                  std::mt19937_64& rng) {
  return random_seq_with_sum(d, r, n, std::vector<std::int64_t>(d, 0), rng);
}

inline std::vector<std::int64_t> random_target(int d, std::int64_t q, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> e(-q, q);
  std::vector<std::int64_t> t(d);
  for (auto& x : t) x = e(rng);
  return t;
}

}  // namespace brute
