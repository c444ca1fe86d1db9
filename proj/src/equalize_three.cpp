#include <algorithm>
#include <numeric>
#include <optional>

#include "repnum/equalize.hpp"
#include "repnum/errors.hpp"
#include "repnum/oracle.hpp"

namespace repnum::equalize {

namespace {

constexpr int kMaxDeletions = 6;

// The graph as vertices are removed from it.
class Shrinking {
 public:
  explicit Shrinking(const SimpleGraph& g) : g_(g), alive_(static_cast<std::size_t>(g.order()), true) {
    for (int v = 0; v < g.order(); ++v) degree_.push_back(g.degree(v));
  }

  int degree(int v) const { return degree_[static_cast<std::size_t>(v)]; }
  bool neighbor(int v, int u) const { return alive_[static_cast<std::size_t>(u)] && g_.adjacent(v, u); }
  const std::vector<int>& deleted() const { return deleted_; }

  void remove(int u) {
    alive_[static_cast<std::size_t>(u)] = false;
    deleted_.push_back(u);
    for (int v = 0; v < g_.order(); ++v) {
      if (g_.adjacent(u, v)) --degree_[static_cast<std::size_t>(v)];
    }
  }

  // Lowest live vertex outside `excluded` satisfying pred.
  template <class Pred>
  std::optional<int> first(const std::array<int, 3>& excluded, Pred pred) const {
    for (int u = 0; u < g_.order(); ++u) {
      if (!alive_[static_cast<std::size_t>(u)]) continue;
      if (std::find(excluded.begin(), excluded.end(), u) != excluded.end()) continue;
      if (pred(u)) return u;
    }
    return std::nullopt;
  }

 private:
  const SimpleGraph& g_;
  std::vector<bool> alive_;
  std::vector<int> degree_;
  std::vector<int> deleted_;
};

DeletionCertificate exhaustive(const SimpleGraph& g, int budget) {
  auto result = oracle::min_deletions_parallel(g, 3, budget);
  if (!result) throw InvariantError("equalize_three: no deletion set within the budget");
  return oracle::to_certificate(*result, 3);
}

// The two-phase deletion. nullopt when a prescribed set runs dry or the
// count passes six.
std::optional<DeletionCertificate> guided(const SimpleGraph& g, const std::array<int, 3>& xyz) {
  const auto [x, y, z] = xyz;
  Shrinking h(g);
  auto over_budget = [&] { return static_cast<int>(h.deleted().size()) > kMaxDeletions; };

  while (h.degree(y) < h.degree(z)) {
    auto in_z_not_y = [&](int u) { return h.neighbor(z, u) && !h.neighbor(y, u); };
    auto u = h.first(xyz, [&](int v) { return in_z_not_y(v) && !h.neighbor(x, v); });
    if (!u) u = h.first(xyz, in_z_not_y);
    if (!u) return std::nullopt;
    h.remove(*u);
    if (over_budget()) return std::nullopt;
  }

  while (h.degree(y) > h.degree(x)) {
    if (h.degree(y) != h.degree(z)) return std::nullopt;
    auto common = h.first(xyz, [&](int u) { return h.neighbor(y, u) && h.neighbor(z, u) && !h.neighbor(x, u); });
    if (common) {
      h.remove(*common);
    } else {
      auto a = h.first(xyz, [&](int u) { return h.neighbor(z, u) && !h.neighbor(x, u); });
      auto b = h.first(xyz, [&](int u) { return h.neighbor(y, u) && !h.neighbor(x, u); });
      if (!a || !b) return std::nullopt;
      h.remove(*a);
      h.remove(*b);
    }
    if (over_budget()) return std::nullopt;
  }
  if (h.degree(x) != h.degree(y) || h.degree(y) != h.degree(z)) return std::nullopt;

  DeletionCertificate cert;
  cert.deleted = h.deleted();
  std::sort(cert.deleted.begin(), cert.deleted.end());
  cert.witness = {x, y, z};
  std::sort(cert.witness.begin(), cert.witness.end());
  cert.common_degree = h.degree(x);
  return cert;
}

}  // namespace

std::array<int, 3> choose_xyz(const SimpleGraph& g, std::span<const int> five) {
  if (five.size() != 5) throw ContractError("choose_xyz needs exactly 5 vertices");
  std::vector<int> xs(five.begin(), five.end());
  std::sort(xs.begin(), xs.end());
  auto by_degree = [&](std::array<int, 3> t) {
    std::stable_sort(t.begin(), t.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
    return t;
  };

  for (bool edges : {true, false}) {  // a triangle, then an independent triple
    for (int a = 0; a < 5; ++a) {
      for (int b = a + 1; b < 5; ++b) {
        for (int c = b + 1; c < 5; ++c) {
          const int u = xs[a], v = xs[b], w = xs[c];
          if (g.adjacent(u, v) == edges && g.adjacent(u, w) == edges && g.adjacent(v, w) == edges) {
            return by_degree({u, v, w});
          }
        }
      }
    }
  }

  // Neither, so the five vertices induce a 5-cycle: take its lowest-degree
  // vertex and that vertex's two cycle neighbours.
  const int x = *std::min_element(xs.begin(), xs.end(), [&](int a, int b) {
    return std::pair(g.degree(a), a) < std::pair(g.degree(b), b);
  });
  std::vector<int> nbrs;
  for (int v : xs) {
    if (v != x && g.adjacent(x, v)) nbrs.push_back(v);
  }
  if (nbrs.size() != 2) throw InvariantError("choose_xyz: five vertices without K3 or 3K1 are not a C5");
  if (g.degree(nbrs[1]) < g.degree(nbrs[0])) std::swap(nbrs[0], nbrs[1]);
  return {x, nbrs[0], nbrs[1]};
}

DeletionCertificate equalize_three(const SimpleGraph& g) {
  const int n = g.order();
  auto finish = [&](DeletionCertificate cert) {
    if (!verify_certificate(g, cert, 3)) throw InvariantError("equalize_three: certificate does not verify");
    return cert;
  };
  if (n < 5) return finish(exhaustive(g, n));

  const auto degrees = rep(g).degrees;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return degrees[static_cast<std::size_t>(a)] < degrees[static_cast<std::size_t>(b)];
  });
  auto deg_at = [&](int i) { return degrees[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]; };

  for (int i = 0; i + 3 <= n; ++i) {
    if (deg_at(i) == deg_at(i + 2)) {
      DeletionCertificate cert;
      cert.witness.assign(order.begin() + i, order.begin() + i + 3);
      std::sort(cert.witness.begin(), cert.witness.end());
      cert.common_degree = deg_at(i);
      return finish(std::move(cert));
    }
  }

  for (int i = 0; i + 5 <= n; ++i) {
    if (deg_at(i + 4) - deg_at(i) > 3) continue;
    const auto xyz = choose_xyz(g, std::span<const int>(order).subspan(static_cast<std::size_t>(i), 5));
    if (auto cert = guided(g, xyz)) return finish(std::move(*cert));
    break;
  }

  DeletionCertificate cert = exhaustive(g, kMaxDeletions);
  cert.fallback_engaged = true;
  return finish(std::move(cert));
}

}  // namespace repnum::equalize
