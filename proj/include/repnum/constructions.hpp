#pragma once

// Generators for graphs whose degrees resist equalization.

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "repnum/graph.hpp"

namespace repnum::constructions {

// Connected graph with exactly one repeated degree, labelled so degrees
// are non-decreasing. Built by alternately adding isolated and dominating
// vertices, the last one dominating.
SimpleGraph antiregular(int n);

// Relabels vertices by non-decreasing degree (ties keep label order).
SimpleGraph sort_by_degree(const SimpleGraph& g);

// ceil(2n / (i ln n)), evaluated at 50 significant digits and rejected
// if the ratio lies too close to an integer to round safely.
std::int64_t clique_size(int n, int i);

struct DnPlan {
  int n = 0;
  std::vector<int> clique_sizes;  // a_1 >= a_2 >= ... >= a_s
  int isolated = 0;               // n - S_s
};

struct DnGraph {
  SimpleGraph graph;  // cliques first, in plan order, then isolated vertices
  DnPlan plan;
};

// Disjoint cliques K_{a_1}, ..., K_{a_s} plus isolated vertices, where s
// is the largest index with a_1 + ... + a_s <= n. Needs n >= 3.
DnGraph dn_graph(int n);

struct BlowupPlan {
  int base_order = 0;
  int q = 0;
  DnPlan inner;  // the graph placed inside every blob
  std::vector<int> base_degrees;
};

struct Blowup {
  SimpleGraph graph;  // vertex (i, x) has label i*q + x
  BlowupPlan plan;
};

// Each base vertex becomes a blob of q vertices carrying a copy of D_q;
// blobs are completely joined exactly when their base vertices are
// adjacent. Needs q >= 3 and a base with non-decreasing degrees.
Blowup blowup(const SimpleGraph& base, int q);

// Largest repetition number over `samples` random induced subgraphs.
// Sample i draws from its own generator seeded with (seed, i).
struct SampleResult {
  int max_rep = 0;
  std::vector<int> worst_subset;
};
SampleResult sample_induced_rep(const SimpleGraph& g, int samples, std::uint64_t seed);
SampleResult sample_induced_rep_parallel(const SimpleGraph& g, int samples, std::uint64_t seed,
                                         int jobs = 0);

nlohmann::json to_json(const DnPlan& plan);
nlohmann::json to_json(const BlowupPlan& plan);

}  // namespace repnum::constructions
