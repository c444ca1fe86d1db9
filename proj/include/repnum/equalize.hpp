#pragma once

// Deleting few vertices so that k vertices end up with the same degree:
// the general pipeline for weighted complete graphs and the dedicated
// procedure for three vertices in simple graphs.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "repnum/graph.hpp"

namespace repnum::equalize {

struct RamseyBound {
  int colors = 0;
  int k = 0;
  std::int64_t value = 0;  // >= R_colors(k)
  bool exact = false;
};

// Exact where a table value is known, otherwise the recursive bound
// R(k_1..k_m) <= 2 - m + sum_i R(.., k_i - 1, ..).
RamseyBound ramsey_upper(int colors, int k);

struct EqualizeParams {
  int k = 0;
  int r = 0;
  std::int64_t s = 0;  // Ramsey bound for r+1 colours
  std::int64_t N = 0;  // trim budget (s+2)(2r(k-1)+1)^(k-1)
  std::int64_t C = 0;  // max(s^2, k + N)
};

EqualizeParams threshold(int k, int r);

// s vertices whose weighted degrees differ pairwise by at most s*r.
// Needs n >= s^2. Returned sorted by label.
std::vector<int> tight_degree_window(const WeightedCompleteGraph& g, int s);

struct MonochromaticClique {
  std::vector<int> vertices;  // sorted
  int weight = 0;
};

// Lexicographically least k-subset of `candidates` whose internal edges
// all carry one weight, trying weight 0 first.
MonochromaticClique monochromatic_clique(const WeightedCompleteGraph& g,
                                         std::span<const int> candidates, int k);

// x_i[j] = w(K_j, v_i) - w(K_last, v_i) for every vertex v_i outside K.
std::vector<std::int64_t> encode_outside(const WeightedCompleteGraph& g,
                                         std::span<const int> clique,
                                         std::span<const int> outside);

// Intermediate choices of equalize(), for inspection.
struct EqualizeTrace {
  bool early_exit = false;   // graph already had rep >= min(k, n)
  bool small_graph = false;  // n < C, kept two vertices
  std::vector<int> window;
  MonochromaticClique clique;
  std::vector<std::int64_t> target_sum;  // z
};

struct EqualizeOptions {
  // Return an empty deletion set when rep(g) >= min(k, n) already. Off
  // forces the full window/clique/trim route on any input.
  bool shortcut_repeated = true;
};

DeletionCertificate equalize(const WeightedCompleteGraph& g, int k, const EqualizeOptions& options = {},
                             EqualizeTrace* trace = nullptr);

// (x, y, z) out of 5 vertices with deg x <= deg y <= deg z,
// (x~y <=> x~z), and y~z only inside a triangle.
std::array<int, 3> choose_xyz(const SimpleGraph& g, std::span<const int> five);

// At most 6 deletions leaving three vertices of equal degree. Graphs
// with fewer than 5 vertices go to the oracle directly.
DeletionCertificate equalize_three(const SimpleGraph& g);

}  // namespace repnum::equalize
