#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace repnum {

// Undirected graph without loops or multi-edges, dense adjacency.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);

  int order() const { return n_; }
  bool adjacent(int u, int v) const { return adj_[index(u, v)] != 0; }
  void set_edge(int u, int v, bool present = true);
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::size_t edge_count() const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v);
  }
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint8_t> adj_;
};

// Complete graph with an integer weight in {0..r} on every pair. Weights
// live in the upper triangle, row-major: (0,1), (0,2), ..., (n-2,n-1).
class WeightedCompleteGraph {
 public:
  WeightedCompleteGraph() = default;
  WeightedCompleteGraph(int n, int r);
  WeightedCompleteGraph(int n, int r, std::vector<int> upper_triangle);

  int order() const { return n_; }
  int weight_bound() const { return r_; }
  int weight(int u, int v) const;
  void set_weight(int u, int v, int w);
  std::span<const int> upper_triangle() const { return weights_; }
  std::int64_t degree(int v) const;

  bool operator==(const WeightedCompleteGraph&) const = default;

 private:
  std::size_t index(int u, int v) const;

  int n_ = 0;
  int r_ = 1;
  std::vector<int> weights_;
};

struct DegreeProfile {
  std::vector<std::int64_t> degrees;
  int rep = 0;  // 0 only for the empty graph
};

DegreeProfile rep(const SimpleGraph& g);
DegreeProfile rep(const WeightedCompleteGraph& g);

// Induced subgraph plus the original label of each surviving vertex.
template <class Graph>
struct Induced {
  Graph graph;
  std::vector<int> labels;
};

Induced<SimpleGraph> delete_vertices(const SimpleGraph& g, std::span<const int> deleted);
Induced<WeightedCompleteGraph> delete_vertices(const WeightedCompleteGraph& g,
                                               std::span<const int> deleted);

WeightedCompleteGraph from_simple(const SimpleGraph& g, int r = 1);

struct DeletionCertificate {
  std::vector<int> deleted;  // original labels, sorted
  std::vector<int> witness;  // original labels, sorted
  std::int64_t common_degree = 0;
  int k = 0;
  bool verified = false;
  bool fallback_engaged = false;
};

// Re-derives the survivor graph and checks the witness. Updates
// cert.verified and cert.k.
bool verify_certificate(const SimpleGraph& g, DeletionCertificate& cert, int k);
bool verify_certificate(const WeightedCompleteGraph& g, DeletionCertificate& cert, int k);

// graph6, short size form only (0 <= n <= 62).
SimpleGraph parse_graph6(std::string_view line);
std::string write_graph6(const SimpleGraph& g);

// {"n": .., "r": .., "weights": [upper triangle, row-major]}
nlohmann::json to_json(const WeightedCompleteGraph& g);
WeightedCompleteGraph weighted_from_json(const nlohmann::json& j);

// {"n": .., "adjacency": [[neighbors of 0], ...]}
nlohmann::json adjacency_json(const SimpleGraph& g);
SimpleGraph simple_from_adjacency_json(const nlohmann::json& j);

nlohmann::json to_json(const DeletionCertificate& cert);

}  // namespace repnum
