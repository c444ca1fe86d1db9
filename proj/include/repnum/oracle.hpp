#pragma once

// Brute-force ground truth: minimum deletion counts and sweeps over
// every labeled graph (n <= 7) or over a graph6 corpus.

#include <array>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "repnum/graph.hpp"

namespace repnum::oracle {

inline constexpr int kMaxLabeledOrder = 7;

// Adjacency bitmasks, n <= 64.
struct BitGraph {
  int n = 0;
  std::array<std::uint64_t, 64> adj{};

  static BitGraph from(const SimpleGraph& g);
  std::uint64_t all() const { return n == 64 ? ~0ULL : (1ULL << n) - 1; }
};

struct OracleResult {
  int min_deletions = 0;
  std::vector<int> witness_deletion;   // sorted
  std::vector<int> witness_equal_set;  // sorted, min(k, survivors) vertices
  std::int64_t common_degree = 0;
};

// Deletion sets are tried by size, then in lexicographic order; the first
// one leaving at least min(k, survivors) vertices of one degree wins.
// nullopt means no set of size <= budget works.
std::optional<OracleResult> min_deletions(const SimpleGraph& g, int k, int budget);

// Same answer as min_deletions. Each size level is split into contiguous
// rank ranges across OpenMP threads; the lowest successful rank wins.
std::optional<OracleResult> min_deletions_parallel(const SimpleGraph& g, int k, int budget,
                                                   int jobs = 0);

DeletionCertificate to_certificate(const OracleResult& result, int k);

// Edge e of the labeled enumeration is the e-th pair in graph6 column
// order: (0,1), (0,2), (1,2), (0,3), ...
std::uint64_t labeled_count(int n);
SimpleGraph labeled_graph(int n, std::uint64_t mask);

// Calls visit(graph) for all 2^(n(n-1)/2) labeled graphs in mask order.
template <class Visit>
void enumerate_labeled(int n, Visit&& visit) {
  const std::uint64_t total = labeled_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) visit(labeled_graph(n, mask));
}

struct SweepOptions {
  int jobs = 0;                  // 0: OpenMP default
  std::size_t max_extremal = 100;  // extremal graphs listed (smallest graph6 first)
};

struct ParseIssue {
  std::size_t line;
  std::string message;
};

struct SweepReport {
  int n = 0;
  int k = 0;
  int budget = 0;
  std::uint64_t graphs_examined = 0;
  // budget + 1 when some graph exhausted the budget (then it is a lower bound)
  int max_min_deletions = 0;
  std::uint64_t exceeded_budget = 0;
  std::vector<std::uint64_t> histogram;  // index t: graphs whose minimum is t
  std::uint64_t extremal_count = 0;
  std::vector<std::string> extremal_graphs;  // sorted graph6
  std::vector<ParseIssue> parse_errors;
  double runtime_seconds = 0;

  void record(int value, const std::string& graph6, std::size_t max_extremal);
  void merge(const SweepReport& other, std::size_t max_extremal);
};

SweepReport sweep_serial(int n, int k, int budget, const SweepOptions& options = {});
SweepReport sweep(int n, int k, int budget, const SweepOptions& options = {});

SweepReport scan_corpus(std::istream& in, int k, int budget, const SweepOptions& options = {});
SweepReport scan_corpus(const std::string& path, int k, int budget,
                        const SweepOptions& options = {});

nlohmann::json to_json(const SweepReport& report);
nlohmann::json to_json(const OracleResult& result);

}  // namespace repnum::oracle
