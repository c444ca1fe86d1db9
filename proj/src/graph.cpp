#include "repnum/graph.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "repnum/errors.hpp"

namespace repnum {

SimpleGraph::SimpleGraph(int n) : n_(n) {
  if (n < 0) throw ContractError("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

void SimpleGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw ContractError("vertex " + std::to_string(v) + " out of range");
}

void SimpleGraph::set_edge(int u, int v, bool present) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ContractError("loops are not allowed");
  adj_[index(u, v)] = adj_[index(v, u)] = present ? 1 : 0;
}

int SimpleGraph::degree(int v) const {
  const auto row = adj_.begin() + static_cast<std::ptrdiff_t>(index(v, 0));
  return static_cast<int>(std::count(row, row + n_, std::uint8_t{1}));
}

std::vector<int> SimpleGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u) {
    if (adjacent(v, u)) out.push_back(u);
  }
  return out;
}

std::size_t SimpleGraph::edge_count() const {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), std::uint8_t{1})) / 2;
}

WeightedCompleteGraph::WeightedCompleteGraph(int n, int r) : n_(n), r_(r) {
  if (n < 0) throw ContractError("negative vertex count");
  if (r < 1) throw ContractError("weight bound r must be positive");
  weights_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2, 0);
}

WeightedCompleteGraph::WeightedCompleteGraph(int n, int r, std::vector<int> upper_triangle)
    : WeightedCompleteGraph(n, r) {
  if (upper_triangle.size() != weights_.size()) {
    throw ContractError("expected " + std::to_string(weights_.size()) + " weights, got " +
                        std::to_string(upper_triangle.size()));
  }
  for (int w : upper_triangle) {
    if (w < 0 || w > r) throw ContractError("weight " + std::to_string(w) + " outside {0..r}");
  }
  weights_ = std::move(upper_triangle);
}

std::size_t WeightedCompleteGraph::index(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
    throw ContractError("invalid vertex pair (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  if (u > v) std::swap(u, v);
  const auto uu = static_cast<std::size_t>(u), n = static_cast<std::size_t>(n_);
  // rows 0..u-1 hold (n-1) + (n-2) + ... + (n-u) entries
  return uu * (2 * n - uu - 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

int WeightedCompleteGraph::weight(int u, int v) const { return weights_[index(u, v)]; }

void WeightedCompleteGraph::set_weight(int u, int v, int w) {
  if (w < 0 || w > r_) throw ContractError("weight " + std::to_string(w) + " outside {0..r}");
  weights_[index(u, v)] = w;
}

std::int64_t WeightedCompleteGraph::degree(int v) const {
  std::int64_t d = 0;
  for (int u = 0; u < n_; ++u) {
    if (u != v) d += weight(u, v);
  }
  return d;
}

namespace {

int max_multiplicity(const std::vector<std::int64_t>& degrees) {
  std::unordered_map<std::int64_t, int> count;
  int best = 0;
  for (auto d : degrees) best = std::max(best, ++count[d]);
  return best;
}

std::vector<int> complement_of(int n, std::span<const int> deleted) {
  std::vector<bool> gone(static_cast<std::size_t>(n), false);
  for (int v : deleted) {
    if (v < 0 || v >= n) throw ContractError("deleted vertex " + std::to_string(v) + " out of range");
    gone[static_cast<std::size_t>(v)] = true;
  }
  std::vector<int> keep;
  for (int v = 0; v < n; ++v) {
    if (!gone[static_cast<std::size_t>(v)]) keep.push_back(v);
  }
  return keep;
}

template <class Graph>
bool verify_impl(const Graph& g, DeletionCertificate& cert, int k) {
  cert.k = k;
  cert.verified = false;
  const int n = g.order();
  auto in_range = [n](int v) { return v >= 0 && v < n; };
  if (!std::all_of(cert.deleted.begin(), cert.deleted.end(), in_range) ||
      !std::all_of(cert.witness.begin(), cert.witness.end(), in_range)) {
    return false;
  }
  std::vector<int> deleted = cert.deleted, witness = cert.witness;
  std::sort(deleted.begin(), deleted.end());
  std::sort(witness.begin(), witness.end());
  if (std::adjacent_find(deleted.begin(), deleted.end()) != deleted.end() ||
      std::adjacent_find(witness.begin(), witness.end()) != witness.end()) {
    return false;
  }
  std::vector<int> both;
  std::set_intersection(deleted.begin(), deleted.end(), witness.begin(), witness.end(),
                        std::back_inserter(both));
  if (!both.empty()) return false;

  const auto sub = delete_vertices(g, deleted);
  const int survivors = sub.graph.order();
  if (static_cast<int>(witness.size()) < std::min(k, survivors)) return false;

  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < survivors; ++i) position[static_cast<std::size_t>(sub.labels[i])] = i;
  for (int v : witness) {
    if (sub.graph.degree(position[static_cast<std::size_t>(v)]) != cert.common_degree) return false;
  }
  cert.verified = true;
  return true;
}

}  // namespace

DegreeProfile rep(const SimpleGraph& g) {
  DegreeProfile p;
  p.degrees.resize(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) p.degrees[static_cast<std::size_t>(v)] = g.degree(v);
  p.rep = max_multiplicity(p.degrees);
  return p;
}

DegreeProfile rep(const WeightedCompleteGraph& g) {
  DegreeProfile p;
  const int n = g.order();
  p.degrees.assign(static_cast<std::size_t>(n), 0);
  const auto w = g.upper_triangle();
  std::size_t e = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++e) {
      p.degrees[static_cast<std::size_t>(u)] += w[e];
      p.degrees[static_cast<std::size_t>(v)] += w[e];
    }
  }
  p.rep = max_multiplicity(p.degrees);
  return p;
}

Induced<SimpleGraph> delete_vertices(const SimpleGraph& g, std::span<const int> deleted) {
  Induced<SimpleGraph> out{SimpleGraph(0), complement_of(g.order(), deleted)};
  const int m = static_cast<int>(out.labels.size());
  out.graph = SimpleGraph(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (g.adjacent(out.labels[i], out.labels[j])) out.graph.set_edge(i, j);
    }
  }
  return out;
}

Induced<WeightedCompleteGraph> delete_vertices(const WeightedCompleteGraph& g,
                                               std::span<const int> deleted) {
  auto labels = complement_of(g.order(), deleted);
  const int m = static_cast<int>(labels.size());
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m > 0 ? m - 1 : 0) / 2);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) w.push_back(g.weight(labels[i], labels[j]));
  }
  return {WeightedCompleteGraph(m, g.weight_bound(), std::move(w)), std::move(labels)};
}

WeightedCompleteGraph from_simple(const SimpleGraph& g, int r) {
  WeightedCompleteGraph out(g.order(), r);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) out.set_weight(u, v, 1);
    }
  }
  return out;
}

bool verify_certificate(const SimpleGraph& g, DeletionCertificate& cert, int k) {
  return verify_impl(g, cert, k);
}

bool verify_certificate(const WeightedCompleteGraph& g, DeletionCertificate& cert, int k) {
  return verify_impl(g, cert, k);
}

nlohmann::json to_json(const WeightedCompleteGraph& g) {
  const auto w = g.upper_triangle();
  return {{"n", g.order()}, {"r", g.weight_bound()}, {"weights", std::vector<int>(w.begin(), w.end())}};
}

WeightedCompleteGraph weighted_from_json(const nlohmann::json& j) {
  try {
    return WeightedCompleteGraph(j.at("n").get<int>(), j.at("r").get<int>(),
                                 j.at("weights").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("weighted graph JSON: ") + e.what(), 0);
  }
}

nlohmann::json adjacency_json(const SimpleGraph& g) {
  nlohmann::json adjacency = nlohmann::json::array();
  for (int v = 0; v < g.order(); ++v) adjacency.push_back(g.neighbors(v));
  return {{"n", g.order()}, {"adjacency", adjacency}};
}

SimpleGraph simple_from_adjacency_json(const nlohmann::json& j) {
  try {
    SimpleGraph g(j.at("n").get<int>());
    const auto& adjacency = j.at("adjacency");
    if (static_cast<int>(adjacency.size()) != g.order()) {
      throw ParseError("adjacency list length differs from n", 0);
    }
    for (int v = 0; v < g.order(); ++v) {
      for (int u : adjacency[static_cast<std::size_t>(v)].get<std::vector<int>>()) g.set_edge(v, u);
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("adjacency JSON: ") + e.what(), 0);
  }
}

nlohmann::json to_json(const DeletionCertificate& cert) {
  return {{"deleted", cert.deleted},
          {"witness", cert.witness},
          {"common_degree", cert.common_degree},
          {"k", cert.k},
          {"verified", cert.verified},
          {"fallback_engaged", cert.fallback_engaged}};
}

}  // namespace repnum
