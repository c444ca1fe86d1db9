#include "repnum/equalize.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "repnum/checked.hpp"
#include "repnum/errors.hpp"
#include "repnum/zerosum.hpp"

namespace repnum::equalize {

namespace {

// Smallest degree shared by at least `need` vertices, and the first
// `need` of them by label; nullopt when no degree is that frequent.
std::optional<DeletionCertificate> already_repeated(const std::vector<std::int64_t>& degrees,
                                                    int need) {
  std::map<std::int64_t, int> count;
  for (auto d : degrees) ++count[d];
  for (const auto& [degree, c] : count) {
    if (c < need) continue;
    DeletionCertificate cert;
    cert.common_degree = degree;
    for (int v = 0; v < static_cast<int>(degrees.size()) && static_cast<int>(cert.witness.size()) < need; ++v) {
      if (degrees[static_cast<std::size_t>(v)] == degree) cert.witness.push_back(v);
    }
    return cert;
  }
  return std::nullopt;
}

bool clique_search(const WeightedCompleteGraph& g, std::span<const int> cand, int k, int weight,
                   std::size_t start, std::vector<int>& chosen) {
  if (static_cast<int>(chosen.size()) == k) return true;
  for (std::size_t i = start; i + (static_cast<std::size_t>(k) - chosen.size()) <= cand.size(); ++i) {
    const int v = cand[i];
    if (std::all_of(chosen.begin(), chosen.end(), [&](int u) { return g.weight(u, v) == weight; })) {
      chosen.push_back(v);
      if (clique_search(g, cand, k, weight, i + 1, chosen)) return true;
      chosen.pop_back();
    }
  }
  return false;
}

}  // namespace

std::vector<int> tight_degree_window(const WeightedCompleteGraph& g, int s) {
  const int n = g.order();
  if (s < 1) throw ContractError("window size must be positive");
  if (static_cast<std::int64_t>(n) < static_cast<std::int64_t>(s) * s) {
    throw ContractError("tight_degree_window needs n >= s^2");
  }
  const auto degrees = rep(g).degrees;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return degrees[static_cast<std::size_t>(a)] < degrees[static_cast<std::size_t>(b)];
  });
  const std::int64_t spread = static_cast<std::int64_t>(s) * g.weight_bound();
  for (int i = 0; i + s <= n; ++i) {
    const auto lo = degrees[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
    const auto hi = degrees[static_cast<std::size_t>(order[static_cast<std::size_t>(i + s - 1)])];
    if (hi - lo <= spread) {
      std::vector<int> window(order.begin() + i, order.begin() + i + s);
      std::sort(window.begin(), window.end());
      return window;
    }
  }
  throw InvariantError("tight_degree_window: no window of s vertices with spread <= s*r");
}

MonochromaticClique monochromatic_clique(const WeightedCompleteGraph& g,
                                         std::span<const int> candidates, int k) {
  if (k < 1) throw ContractError("clique size must be positive");
  std::vector<int> cand(candidates.begin(), candidates.end());
  std::sort(cand.begin(), cand.end());
  for (int weight = 0; weight <= g.weight_bound(); ++weight) {
    std::vector<int> chosen;
    if (clique_search(g, cand, k, weight, 0, chosen)) return {chosen, weight};
  }
  if (static_cast<std::int64_t>(cand.size()) >= ramsey_upper(g.weight_bound() + 1, k).value) {
    throw InvariantError("monochromatic_clique: none found at or above the Ramsey bound");
  }
  throw ContractError("monochromatic_clique: no monochromatic clique among the candidates");
}

std::vector<std::int64_t> encode_outside(const WeightedCompleteGraph& g,
                                         std::span<const int> clique,
                                         std::span<const int> outside) {
  const std::size_t d = clique.size() - 1;
  const int last = clique.back();
  std::vector<std::int64_t> flat;
  flat.reserve(outside.size() * d);
  for (int v : outside) {
    const int base = g.weight(last, v);
    for (std::size_t j = 0; j < d; ++j) flat.push_back(g.weight(clique[j], v) - base);
  }
  return flat;
}

DeletionCertificate equalize(const WeightedCompleteGraph& g, int k, const EqualizeOptions& options,
                             EqualizeTrace* trace) {
  if (k < 2) throw ContractError("equalize needs k >= 2");
  EqualizeTrace local;
  EqualizeTrace& tr = trace ? *trace : local;
  tr = EqualizeTrace{};

  const int n = g.order();
  const int r = g.weight_bound();
  const EqualizeParams params = threshold(k, r);
  const auto degrees = rep(g).degrees;

  auto finish = [&](DeletionCertificate cert) {
    std::sort(cert.deleted.begin(), cert.deleted.end());
    if (!verify_certificate(g, cert, k)) {
      throw InvariantError("equalize: produced certificate does not verify");
    }
    return cert;
  };

  if (options.shortcut_repeated || n < 3) {
    if (auto cert = already_repeated(degrees, std::min(k, n))) {
      tr.early_exit = true;
      return finish(std::move(*cert));
    }
  }

  if (n < params.C) {
    // Two vertices of a complete graph always have equal degree.
    tr.small_graph = true;
    DeletionCertificate cert;
    for (int v = 2; v < n; ++v) cert.deleted.push_back(v);
    cert.witness = {0, 1};
    cert.common_degree = g.weight(0, 1);
    return finish(std::move(cert));
  }

  tr.window = tight_degree_window(g, static_cast<int>(params.s));
  tr.clique = monochromatic_clique(g, tr.window, k);
  const auto& clique = tr.clique.vertices;

  std::vector<int> outside;
  for (int v = 0; v < n; ++v) {
    if (!std::binary_search(clique.begin(), clique.end(), v)) outside.push_back(v);
  }
  const zerosum::IntVecSeq seq(k - 1, r, encode_outside(g, clique, outside));
  tr.target_sum = seq.total();

  const std::int64_t q = checked_mul(params.s, r, "equalize");
  for (int j = 0; j + 1 < k; ++j) {
    const auto expected = degrees[static_cast<std::size_t>(clique[static_cast<std::size_t>(j)])] -
                          degrees[static_cast<std::size_t>(clique.back())];
    if (tr.target_sum[static_cast<std::size_t>(j)] != expected) {
      throw InvariantError("equalize: encoded coordinate sum differs from the degree difference");
    }
  }
  if (zerosum::linf(tr.target_sum) > q) {
    throw InvariantError("equalize: clique degrees spread by more than s*r");
  }

  const auto kept = zerosum::trim_to_sum(seq, q);
  if (static_cast<std::int64_t>(kept.size()) > params.N) {
    throw InvariantError("equalize: trimmed subsequence exceeds the budget N");
  }

  DeletionCertificate cert;
  for (std::size_t i : kept) cert.deleted.push_back(outside[i]);
  cert.witness = clique;
  std::int64_t common = degrees[static_cast<std::size_t>(clique.front())];
  for (int u : cert.deleted) common -= g.weight(clique.front(), u);
  cert.common_degree = common;
  return finish(std::move(cert));
}

}  // namespace repnum::equalize
