#include <gtest/gtest.h>

#include <cmath>

#include "brute.hpp"
#include "repnum/constructions.hpp"
#include "repnum/errors.hpp"

using namespace repnum;
using namespace repnum::constructions;

TEST(Antiregular, Small) {
  EXPECT_EQ(rep(antiregular(2)).rep, 2);
  auto p = rep(antiregular(4));
  EXPECT_EQ(p.degrees, (std::vector<std::int64_t>{1, 2, 2, 3}));
  EXPECT_EQ(p.rep, 2);
  EXPECT_THROW(antiregular(1), ContractError);
}

// rep = 2, degrees sorted, the floor((i-j)/2) gap, and connectivity.
TEST(Antiregular, UpToHundred) {
  for (int n = 2; n <= 100; ++n) {
    auto g = antiregular(n);
    auto p = rep(g);
    EXPECT_EQ(p.rep, 2) << n;
    EXPECT_TRUE(std::is_sorted(p.degrees.begin(), p.degrees.end()));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) EXPECT_GE(p.degrees[i] - p.degrees[j], (i - j) / 2);
    EXPECT_EQ(p.degrees.back(), n - 1);  // a dominating vertex
  }
}

TEST(SortByDegree, Relabels) {
  SimpleGraph p3(3);
  p3.set_edge(0, 1);
  p3.set_edge(1, 2);
  auto s = sort_by_degree(p3);
  EXPECT_EQ(rep(s).degrees, (std::vector<std::int64_t>{1, 1, 2}));
  EXPECT_TRUE(s.adjacent(0, 2) && s.adjacent(1, 2));
}

TEST(CliqueSize, AgreesWithDouble) {
  for (int n = 3; n <= 400; ++n)
    for (int i = 1; i <= 25; ++i)
      EXPECT_EQ(clique_size(n, i), static_cast<std::int64_t>(std::ceil(2.0 * n / (i * std::log(n)))));
}

TEST(Dn, Hundred) {
  auto d = dn_graph(100);
  EXPECT_EQ(d.plan.clique_sizes, (std::vector<int>{44, 22, 15, 11}));
  EXPECT_EQ(d.plan.isolated, 8);
  EXPECT_EQ(d.graph.order(), 100);
  auto p = rep(d.graph);
  EXPECT_EQ(p.degrees[0], 43);
  EXPECT_EQ(p.degrees[99], 0);
}

TEST(Dn, Three) {
  auto d = dn_graph(3);
  EXPECT_TRUE(d.plan.clique_sizes.empty());
  EXPECT_EQ(d.plan.isolated, 3);
  EXPECT_EQ(d.graph.edge_count(), 0u);
  EXPECT_THROW(dn_graph(2), ContractError);
}

TEST(Dn, PlanShape) {
  for (int n = 3; n <= 500; ++n) {
    auto d = dn_graph(n);
    ASSERT_EQ(d.graph.order(), n);
    int total = d.plan.isolated;
    for (int a : d.plan.clique_sizes) total += a;
    EXPECT_EQ(total, n);
    EXPECT_LE(d.plan.clique_sizes.size(), static_cast<std::size_t>(std::ceil(std::sqrt(n))));
    EXPECT_LE(d.plan.isolated, clique_size(n, 1));
  }
}

TEST(Blowup, EdgeGivesCompleteBipartite) {
  SimpleGraph k2(2);
  k2.set_edge(0, 1);
  auto b = blowup(k2, 3);
  EXPECT_EQ(b.graph.order(), 6);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) EXPECT_EQ(b.graph.adjacent(u, v), (u < 3) != (v < 3));
  EXPECT_THROW(blowup(k2, 2), ContractError);
}

TEST(Blowup, PathOfThree) {
  SimpleGraph p3(3);
  p3.set_edge(0, 2);
  p3.set_edge(1, 2);
  auto b = blowup(p3, 5);
  auto deg = rep(b.graph).degrees;
  for (int v = 0; v < 10; ++v) EXPECT_EQ(deg[v], 5);
  for (int v = 10; v < 15; ++v) EXPECT_EQ(deg[v], 10);

  SimpleGraph unsorted(3);
  unsorted.set_edge(0, 1);
  unsorted.set_edge(1, 2);
  EXPECT_THROW(blowup(unsorted, 5), ContractError);
}

TEST(Blowup, SandwichAndGap) {
  for (int n : {6, 11, 20}) {
    for (int q : {3, 5, 9}) {
      auto base = antiregular(n);
      auto b = blowup(base, q);
      auto deg = rep(b.graph).degrees;
      for (int i = 0; i < n; ++i)
        for (int x = 0; x < q; ++x) {
          EXPECT_GE(deg[i * q + x], static_cast<std::int64_t>(q) * base.degree(i));
          EXPECT_LT(deg[i * q + x], static_cast<std::int64_t>(q) * (base.degree(i) + 1));
        }
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
          for (int x = 0; x < q; ++x)
            for (int y = 0; y < q; ++y)
              EXPECT_GE(2 * (deg[i * q + x] - deg[j * q + y]), static_cast<std::int64_t>(q) * (i - j) - 3 * q);
    }
  }
}

TEST(Sampler, SerialMatchesParallel) {
  auto d = dn_graph(80);
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    auto a = sample_induced_rep(d.graph, 300, seed);
    auto b = sample_induced_rep_parallel(d.graph, 300, seed, 3);
    EXPECT_EQ(a.max_rep, b.max_rep);
    EXPECT_EQ(a.worst_subset, b.worst_subset);
    auto sub = delete_vertices(d.graph, [&] {
      std::vector<int> out;
      for (int v = 0; v < 80; ++v)
        if (!std::binary_search(a.worst_subset.begin(), a.worst_subset.end(), v)) out.push_back(v);
      return out;
    }());
    EXPECT_EQ(rep(sub.graph).rep, a.max_rep);
  }
}

TEST(Sampler, DnStaysBelowBound) {
  for (int n : {50, 100}) {
    auto d = dn_graph(n);
    auto s = sample_induced_rep(d.graph, 200, 7);
    EXPECT_LE(s.max_rep, 3.0 * n / std::log(n));
  }
}

TEST(Plans, Json) {
  auto j = to_json(dn_graph(100).plan);
  EXPECT_EQ(j["clique_sizes"], (std::vector<int>{44, 22, 15, 11}));
  EXPECT_EQ(j["isolated"], 8);
  auto b = blowup(antiregular(10), 5);
  auto jb = to_json(b.plan);
  EXPECT_EQ(jb["vertices"], 50);
}
