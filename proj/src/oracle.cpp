#include "repnum/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <limits>

#include "repnum/errors.hpp"

namespace repnum::oracle {

namespace {

std::uint64_t binomial(int n, int t) {
  if (t < 0 || t > n) return 0;
  t = std::min(t, n - t);
  std::uint64_t out = 1;
  for (int i = 1; i <= t; ++i) out = out * static_cast<std::uint64_t>(n - t + i) / static_cast<std::uint64_t>(i);
  return out;
}

// True when the vertices in `alive` include `need` of one degree.
bool has_repeated_degree(const BitGraph& g, std::uint64_t alive, int need) {
  if (need <= 1) return need <= 0 || alive != 0;
  std::array<std::uint8_t, 65> count{};
  for (std::uint64_t m = alive; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    const int d = std::popcount(g.adj[static_cast<std::size_t>(v)] & alive);
    if (++count[static_cast<std::size_t>(d)] >= need) return true;
  }
  return false;
}

std::uint64_t mask_of(const std::vector<int>& combo) {
  std::uint64_t m = 0;
  for (int v : combo) m |= 1ULL << v;
  return m;
}

bool next_combination(std::vector<int>& c, int n) {
  const int t = static_cast<int>(c.size());
  int i = t - 1;
  while (i >= 0 && c[static_cast<std::size_t>(i)] == n - t + i) --i;
  if (i < 0) return false;
  ++c[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < t; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

std::vector<int> unrank_combination(int n, int t, std::uint64_t rank) {
  std::vector<int> c;
  c.reserve(static_cast<std::size_t>(t));
  int x = 0;
  for (int i = 0; i < t; ++i) {
    for (;; ++x) {
      const std::uint64_t with_x = binomial(n - x - 1, t - i - 1);
      if (rank < with_x) break;
      rank -= with_x;
    }
    c.push_back(x++);
  }
  return c;
}

OracleResult describe(const BitGraph& g, int k, const std::vector<int>& deleted) {
  const std::uint64_t alive = g.all() & ~mask_of(deleted);
  const int survivors = std::popcount(alive);
  const int need = std::min(k, survivors);
  std::array<int, 65> count{};
  for (std::uint64_t m = alive; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    ++count[static_cast<std::size_t>(std::popcount(g.adj[static_cast<std::size_t>(v)] & alive))];
  }
  OracleResult r;
  r.min_deletions = static_cast<int>(deleted.size());
  r.witness_deletion = deleted;
  if (need == 0) return r;
  const auto degree = static_cast<int>(
      std::find_if(count.begin(), count.end(), [need](int c) { return c >= need; }) - count.begin());
  r.common_degree = degree;
  for (std::uint64_t m = alive; m && static_cast<int>(r.witness_equal_set.size()) < need; m &= m - 1) {
    const int v = std::countr_zero(m);
    if (std::popcount(g.adj[static_cast<std::size_t>(v)] & alive) == degree) r.witness_equal_set.push_back(v);
  }
  return r;
}

// Smallest deletion size, or -1 when none within budget. Lexicographic
// search; fills `witness` when non-null.
int min_deletions_core(const BitGraph& g, int k, int budget, std::vector<int>* witness) {
  const std::uint64_t all = g.all();
  for (int t = 0; t <= std::min(budget, g.n); ++t) {
    const int need = std::min(k, g.n - t);
    std::vector<int> c(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) c[static_cast<std::size_t>(i)] = i;
    do {
      if (has_repeated_degree(g, all & ~mask_of(c), need)) {
        if (witness) *witness = c;
        return t;
      }
    } while (t > 0 && next_combination(c, g.n));
  }
  return -1;
}

std::vector<std::pair<int, int>> column_order_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  return pairs;
}

BitGraph bitgraph_from_mask(int n, std::uint64_t mask, const std::vector<std::pair<int, int>>& pairs) {
  BitGraph g;
  g.n = n;
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    if ((mask >> e) & 1) {
      const auto [i, j] = pairs[e];
      g.adj[static_cast<std::size_t>(i)] |= 1ULL << j;
      g.adj[static_cast<std::size_t>(j)] |= 1ULL << i;
    }
  }
  return g;
}

std::string graph6_of(const BitGraph& g) {
  std::string out(1, static_cast<char>(63 + g.n));
  int acc = 0, used = 0;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | static_cast<int>((g.adj[static_cast<std::size_t>(i)] >> j) & 1);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

void check_sweep_args(int n, int k, int budget) {
  if (n < 0) throw ContractError("n must be nonnegative");
  if (n > kMaxLabeledOrder) {
    throw ContractError("exhaustive labeled enumeration stops at n = 7; use corpus mode (oracle scan)");
  }
  if (k < 1) throw ContractError("k must be positive");
  if (budget < 0) throw ContractError("budget must be nonnegative");
}

SweepReport empty_report(int n, int k, int budget) {
  SweepReport r;
  r.n = n;
  r.k = k;
  r.budget = budget;
  r.histogram.assign(static_cast<std::size_t>(budget) + 2, 0);
  return r;
}

void sweep_range(SweepReport& report, int n, int k, int budget, std::uint64_t begin,
                 std::uint64_t end, std::size_t max_extremal) {
  const auto pairs = column_order_pairs(n);
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    const BitGraph g = bitgraph_from_mask(n, mask, pairs);
    const int t = min_deletions_core(g, k, budget, nullptr);
    const int value = t < 0 ? budget + 1 : t;
    if (value >= report.max_min_deletions) {
      report.record(value, graph6_of(g), max_extremal);
    } else {
      report.record(value, {}, max_extremal);
    }
  }
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

BitGraph BitGraph::from(const SimpleGraph& g) {
  if (g.order() > 64) throw ContractError("bit graphs hold at most 64 vertices");
  BitGraph b;
  b.n = g.order();
  for (int u = 0; u < b.n; ++u) {
    for (int v = 0; v < b.n; ++v) {
      if (u != v && g.adjacent(u, v)) b.adj[static_cast<std::size_t>(u)] |= 1ULL << v;
    }
  }
  return b;
}

std::optional<OracleResult> min_deletions(const SimpleGraph& g, int k, int budget) {
  if (budget < 0) throw ContractError("budget must be nonnegative");
  if (k < 1) throw ContractError("k must be positive");
  const BitGraph b = BitGraph::from(g);
  std::vector<int> witness;
  if (min_deletions_core(b, k, budget, &witness) < 0) return std::nullopt;
  return describe(b, k, witness);
}

std::optional<OracleResult> min_deletions_parallel(const SimpleGraph& g, int k, int budget,
                                                   int jobs) {
  if (budget < 0) throw ContractError("budget must be nonnegative");
  if (k < 1) throw ContractError("k must be positive");
  const BitGraph b = BitGraph::from(g);
  const std::uint64_t all = b.all();
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();

  for (int t = 0; t <= std::min(budget, b.n); ++t) {
    const int need = std::min(k, b.n - t);
    const std::uint64_t total = binomial(b.n, t);
    const std::uint64_t chunk = std::max<std::uint64_t>(1, total / (static_cast<std::uint64_t>(threads) * 16));
    const auto chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t ci = 0; ci < chunks; ++ci) {
      const std::uint64_t start = static_cast<std::uint64_t>(ci) * chunk;
      if (start >= best.load(std::memory_order_relaxed)) continue;
      const std::uint64_t stop = std::min(total, start + chunk);
      std::vector<int> c = unrank_combination(b.n, t, start);
      for (std::uint64_t rank = start; rank < stop; ++rank) {
        if (has_repeated_degree(b, all & ~mask_of(c), need)) {
          std::uint64_t seen = best.load();
          while (rank < seen && !best.compare_exchange_weak(seen, rank)) {
          }
          break;
        }
        next_combination(c, b.n);
      }
    }
    if (best.load() != std::numeric_limits<std::uint64_t>::max()) {
      return describe(b, k, unrank_combination(b.n, t, best.load()));
    }
  }
  return std::nullopt;
}

DeletionCertificate to_certificate(const OracleResult& result, int k) {
  DeletionCertificate cert;
  cert.deleted = result.witness_deletion;
  cert.witness = result.witness_equal_set;
  cert.common_degree = result.common_degree;
  cert.k = k;
  return cert;
}

std::uint64_t labeled_count(int n) {
  if (n < 0 || n > kMaxLabeledOrder) {
    throw ContractError("exhaustive labeled enumeration stops at n = 7; use corpus mode (oracle scan)");
  }
  return 1ULL << (n * (n - 1) / 2);
}

SimpleGraph labeled_graph(int n, std::uint64_t mask) {
  SimpleGraph g(n);
  const auto pairs = column_order_pairs(n);
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    if ((mask >> e) & 1) g.set_edge(pairs[e].first, pairs[e].second);
  }
  return g;
}

void SweepReport::record(int value, const std::string& graph6, std::size_t max_extremal) {
  ++graphs_examined;
  if (histogram.size() <= static_cast<std::size_t>(value)) histogram.resize(static_cast<std::size_t>(value) + 1, 0);
  ++histogram[static_cast<std::size_t>(value)];
  if (value > budget) ++exceeded_budget;
  if (value > max_min_deletions || graphs_examined == 1) {
    max_min_deletions = value;
    extremal_count = 0;
    extremal_graphs.clear();
  }
  if (value == max_min_deletions) {
    ++extremal_count;
    auto pos = std::lower_bound(extremal_graphs.begin(), extremal_graphs.end(), graph6);
    if (extremal_graphs.size() < max_extremal || pos != extremal_graphs.end()) {
      extremal_graphs.insert(pos, graph6);
      if (extremal_graphs.size() > max_extremal) extremal_graphs.pop_back();
    }
  }
}

void SweepReport::merge(const SweepReport& other, std::size_t max_extremal) {
  if (other.graphs_examined == 0) {
    parse_errors.insert(parse_errors.end(), other.parse_errors.begin(), other.parse_errors.end());
    return;
  }
  if (graphs_examined == 0 || other.max_min_deletions > max_min_deletions) {
    max_min_deletions = other.max_min_deletions;
    extremal_count = other.extremal_count;
    extremal_graphs = other.extremal_graphs;
  } else if (other.max_min_deletions == max_min_deletions) {
    extremal_count += other.extremal_count;
    std::vector<std::string> merged;
    std::merge(extremal_graphs.begin(), extremal_graphs.end(), other.extremal_graphs.begin(),
               other.extremal_graphs.end(), std::back_inserter(merged));
    if (merged.size() > max_extremal) merged.resize(max_extremal);
    extremal_graphs = std::move(merged);
  }
  graphs_examined += other.graphs_examined;
  exceeded_budget += other.exceeded_budget;
  n = std::max(n, other.n);
  if (histogram.size() < other.histogram.size()) histogram.resize(other.histogram.size(), 0);
  for (std::size_t i = 0; i < other.histogram.size(); ++i) histogram[i] += other.histogram[i];
  parse_errors.insert(parse_errors.end(), other.parse_errors.begin(), other.parse_errors.end());
}

SweepReport sweep_serial(int n, int k, int budget, const SweepOptions& options) {
  check_sweep_args(n, k, budget);
  const auto start = Clock::now();
  SweepReport report = empty_report(n, k, budget);
  sweep_range(report, n, k, budget, 0, labeled_count(n), options.max_extremal);
  report.runtime_seconds = seconds_since(start);
  return report;
}

SweepReport sweep(int n, int k, int budget, const SweepOptions& options) {
  check_sweep_args(n, k, budget);
  const auto start = Clock::now();
  const std::uint64_t total = labeled_count(n);
  const int workers = options.jobs > 0 ? options.jobs : omp_get_max_threads();
  std::vector<SweepReport> parts(static_cast<std::size_t>(workers), empty_report(n, k, budget));

#pragma omp parallel for schedule(static, 1) num_threads(workers)
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t begin = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
    const std::uint64_t end = total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
    sweep_range(parts[static_cast<std::size_t>(w)], n, k, budget, begin, end, options.max_extremal);
  }

  SweepReport report = empty_report(n, k, budget);
  for (const auto& part : parts) report.merge(part, options.max_extremal);
  report.runtime_seconds = seconds_since(start);
  return report;
}

SweepReport scan_corpus(std::istream& in, int k, int budget, const SweepOptions& options) {
  if (k < 1) throw ContractError("k must be positive");
  if (budget < 0) throw ContractError("budget must be nonnegative");
  const auto start = Clock::now();

  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));

  const int workers = options.jobs > 0 ? options.jobs : omp_get_max_threads();
  std::vector<SweepReport> parts(static_cast<std::size_t>(workers), empty_report(0, k, budget));
  const std::size_t total = lines.size();

#pragma omp parallel for schedule(static, 1) num_threads(workers)
  for (int w = 0; w < workers; ++w) {
    SweepReport& part = parts[static_cast<std::size_t>(w)];
    const std::size_t begin = total * static_cast<std::size_t>(w) / static_cast<std::size_t>(workers);
    const std::size_t end = total * static_cast<std::size_t>(w + 1) / static_cast<std::size_t>(workers);
    for (std::size_t i = begin; i < end; ++i) {
      const std::string& line = lines[i];
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        const BitGraph g = BitGraph::from(parse_graph6(line));
        const int t = min_deletions_core(g, k, budget, nullptr);
        const int value = t < 0 ? budget + 1 : t;
        part.n = std::max(part.n, g.n);
        part.record(value, value >= part.max_min_deletions ? graph6_of(g) : std::string(),
                    options.max_extremal);
      } catch (const ParseError& e) {
        part.parse_errors.push_back({i + 1, e.what()});
      }
    }
  }

  SweepReport report = empty_report(0, k, budget);
  for (const auto& part : parts) report.merge(part, options.max_extremal);
  report.runtime_seconds = seconds_since(start);
  return report;
}

SweepReport scan_corpus(const std::string& path, int k, int budget, const SweepOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file " + path);
  return scan_corpus(in, k, budget, options);
}

nlohmann::json to_json(const SweepReport& report) {
  nlohmann::json errors = nlohmann::json::array();
  for (const auto& e : report.parse_errors) errors.push_back({{"line", e.line}, {"message", e.message}});
  return {{"n", report.n},
          {"k", report.k},
          {"budget", report.budget},
          {"graphs_examined", report.graphs_examined},
          {"max_min_deletions", report.max_min_deletions},
          {"exceeded_budget", report.exceeded_budget},
          {"histogram", report.histogram},
          {"extremal_count", report.extremal_count},
          {"extremal_graphs", report.extremal_graphs},
          {"parse_errors", errors},
          {"runtime_seconds", report.runtime_seconds}};
}

nlohmann::json to_json(const OracleResult& result) {
  return {{"min_deletions", result.min_deletions},
          {"witness_deletion", result.witness_deletion},
          {"witness_equal_set", result.witness_equal_set},
          {"common_degree", result.common_degree}};
}

}  // namespace repnum::oracle
