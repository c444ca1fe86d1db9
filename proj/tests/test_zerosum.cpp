#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "brute.hpp"
#include "repnum/errors.hpp"
#include "repnum/zerosum.hpp"

using namespace repnum::zerosum;
using repnum::ContractError;

namespace {

void expect_prefixes_bounded(const IntVecSeq& seq, const PrefixRecord& rec) {
  ASSERT_EQ(rec.permutation.size(), seq.size());
  std::set<std::size_t> seen(rec.permutation.begin(), rec.permutation.end());
  ASSERT_EQ(seen.size(), seq.size());
  const std::int64_t limit = seq.bound() * seq.dim();
  std::vector<std::int64_t> s(seq.dim(), 0);
  for (std::size_t j = 0; j < seq.size(); ++j) {
    for (int c = 0; c < seq.dim(); ++c) s[c] += seq[rec.permutation[j]][c];
    EXPECT_LE(linf(s), limit) << "position " << j;
    EXPECT_EQ(rec.prefix_sums[j], s);
  }
}

void expect_witness(const IntVecSeq& seq, const ZeroSumWitness& w) {
  ASSERT_FALSE(w.indices.empty());
  ASSERT_LT(w.indices.size(), seq.size());
  EXPECT_TRUE(std::is_sorted(w.indices.begin(), w.indices.end()));
  EXPECT_EQ(std::set<std::size_t>(w.indices.begin(), w.indices.end()).size(), w.indices.size());
  EXPECT_EQ(brute::sum_of(seq, w.indices), std::vector<std::int64_t>(seq.dim(), 0));
}

void expect_trim(const IntVecSeq& seq, std::int64_t q, const std::vector<std::size_t>& kept) {
  EXPECT_LE(static_cast<std::int64_t>(kept.size()), size_bound(seq.bound(), seq.dim(), q));
  EXPECT_TRUE(std::is_sorted(kept.begin(), kept.end()));
  EXPECT_EQ(brute::sum_of(seq, kept), seq.total());
}

}  // namespace

TEST(SizeBound, Values) {
  EXPECT_EQ(size_bound(1, 1, 1), 9);
  EXPECT_EQ(size_bound(1, 2, 6), 200);
  EXPECT_EQ(size_bound(2, 1, 2), 15);
  EXPECT_EQ(size_bound(3, 1, 0), 2 * 7);
  EXPECT_THROW(size_bound(1000, 10, 5), repnum::OverflowError);
  EXPECT_THROW(size_bound(0, 1, 1), ContractError);
}

TEST(Completion, Examples) {
  std::vector<std::int64_t> zero{0, 0, 0};
  auto a = artificial_completion(zero, 1, 1);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0], zero);

  std::vector<std::int64_t> w{3};
  auto b = artificial_completion(w, 2, 2);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0], std::vector<std::int64_t>{-2});
  EXPECT_EQ(b[1], std::vector<std::int64_t>{-1});

  EXPECT_THROW(artificial_completion(w, 1, 2), ContractError);
}

TEST(Completion, RandomTargets) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) {
    const int d = 1 + rng() % 4;
    const std::int64_t r = 1 + rng() % 3, p = rng() % 5;
    auto w = brute::random_target(d, p * r, rng);
    auto vs = artificial_completion(w, r, p);
    ASSERT_EQ(static_cast<std::int64_t>(vs.size()), p);
    std::vector<std::int64_t> s(d, 0);
    for (auto& v : vs) {
      EXPECT_LE(linf(v), r);
      for (int c = 0; c < d; ++c) s[c] += v[c];
    }
    for (int c = 0; c < d; ++c) EXPECT_EQ(s[c], -w[c]);
  }
}

TEST(Steinitz, AlternatingSigns) {
  IntVecSeq seq(1, 1, {1, -1, 1, -1});
  expect_prefixes_bounded(seq, steinitz_reorder(seq));
}

TEST(Steinitz, SingleZeroVector) {
  IntVecSeq seq(2, 1, {0, 0});
  auto rec = steinitz_reorder(seq);
  EXPECT_EQ(rec.permutation, std::vector<std::size_t>{0});
  EXPECT_EQ(rec.prefix_sums[0], (std::vector<std::int64_t>{0, 0}));
}

TEST(Steinitz, NonZeroSumRejected) {
  IntVecSeq seq(1, 1, {1, 1});
  EXPECT_THROW(steinitz_reorder(seq), ContractError);
}

TEST(Steinitz, TwelveRandomPlanar) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 50; ++t) {
    auto seq = brute::random_zero_sum(2, 1, 12, rng);
    expect_prefixes_bounded(seq, steinitz_reorder(seq));
  }
}

// The brute-force search confirms the bound is attainable at all, so a
// returned order is not vacuous.
TEST(Steinitz, AgreesWithPermutationSearch) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 60; ++t) {
    const int d = 1 + rng() % 2;
    const std::int64_t r = 1 + rng() % 2;
    const std::size_t n = 2 + rng() % 7;
    auto seq = brute::random_zero_sum(d, r, n, rng);
    EXPECT_TRUE(brute::steinitz_order_exists(seq, r * d));
    expect_prefixes_bounded(seq, steinitz_reorder(seq));
  }
}

TEST(Steinitz, ChainInvariant) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 30; ++t) {
    const int d = 1 + rng() % 3;
    const std::int64_t r = 1 + rng() % 3;
    const std::size_t n = d + 1 + rng() % 25;
    auto seq = brute::random_zero_sum(d, r, n, rng);
    std::size_t calls = 0;
    steinitz_reorder(seq, [&](const ChainState& st) {
      ++calls;
      ASSERT_EQ(st.point.support.size(), st.k);
      repnum::exact::Rational total = 0;
      std::vector<repnum::exact::Rational> weighted(d, 0);
      std::vector<std::int64_t> plain(d, 0);
      for (std::size_t i = 0; i < st.k; ++i) {
        const auto& a = st.point.coords[i];
        EXPECT_GE(a, 0);
        EXPECT_LE(a, 1);
        total += a;
        for (int c = 0; c < d; ++c) {
          weighted[c] += a * repnum::exact::Rational(seq[st.point.support[i]][c]);
          plain[c] += seq[st.point.support[i]][c];
        }
      }
      EXPECT_EQ(total, repnum::exact::Rational(static_cast<long>(st.k) - d));
      for (auto& x : weighted) EXPECT_EQ(x, 0);
      EXPECT_LE(linf(plain), r * d);
    });
    EXPECT_EQ(calls, n - d + 1);
  }
}

TEST(FindZeroSum, ZeroVectorFastPath) {
  IntVecSeq seq(1, 1, {1, -1, 1, -1, 1, -1, 1, -1, 0});
  auto w = find_zero_sum_subsequence(seq, 1);
  EXPECT_EQ(w.indices, std::vector<std::size_t>{8});
}

TEST(FindZeroSum, PatternAtBound) {
  IntVecSeq seq(1, 1, {1, -1, 1, -1, 1, -1, 1, -1, 1});
  expect_witness(seq, find_zero_sum_subsequence(seq, 1));
}

TEST(FindZeroSum, Preconditions) {
  IntVecSeq short_seq(1, 1, {1, -1, 1});
  EXPECT_THROW(find_zero_sum_subsequence(short_seq, 1), ContractError);
  IntVecSeq big_sum(1, 1, std::vector<std::int64_t>(9, 1));
  EXPECT_THROW(find_zero_sum_subsequence(big_sum, 1), ContractError);
  EXPECT_THROW(find_zero_sum_subsequence(short_seq, -1), ContractError);
}

// d = 1 instances at the bound are small enough for the subset oracle.
TEST(FindZeroSum, AtBoundWithSubsetOracle) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    const std::int64_t r = 1 + rng() % 2, q = rng() % 5;
    const std::size_t n = static_cast<std::size_t>(size_bound(r, 1, q));
    if (n > 20) continue;
    auto seq = brute::random_seq_with_sum(1, r, n, brute::random_target(1, q, rng), rng);
    EXPECT_TRUE(brute::zero_sum_subset_exists(seq));
    expect_witness(seq, find_zero_sum_subsequence(seq, q));
  }
}

TEST(FindZeroSum, AtBoundPlanar) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    const std::int64_t r = 1 + rng() % 2, q = rng() % 5;
    const std::size_t n = static_cast<std::size_t>(size_bound(r, 2, q));
    auto seq = brute::random_seq_with_sum(2, r, n, brute::random_target(2, q, rng), rng);
    expect_witness(seq, find_zero_sum_subsequence(seq, q));
  }
}

TEST(Trim, ShortInputKeptWhole) {
  IntVecSeq seq(1, 1, {1, 1, -1});
  EXPECT_EQ(trim_to_sum(seq, 1), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Trim, AlternatingPattern) {
  std::vector<std::int64_t> flat;
  for (int i = 0; i < 20; ++i) flat.insert(flat.end(), {1, -1});
  flat.push_back(1);
  IntVecSeq seq(1, 1, flat);
  auto kept = trim_to_sum(seq, 1);
  EXPECT_LE(kept.size(), 9u);
  expect_trim(seq, 1, kept);
  auto slow = trim_to_sum_iterative(seq, 1);
  expect_trim(seq, 1, slow);
}

TEST(Trim, ThreeHundredPlanar) {
  std::mt19937_64 rng(300);
  for (int t = 0; t < 3; ++t) {
    auto seq = brute::random_seq_with_sum(2, 1, 300, brute::random_target(2, 6, rng), rng);
    auto kept = trim_to_sum(seq, 6);
    EXPECT_LE(kept.size(), 200u);
    expect_trim(seq, 6, kept);
  }
}

TEST(Trim, IterativeMeetsSameContract) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    const std::int64_t r = 1 + rng() % 2, q = rng() % 3;
    const std::size_t n = static_cast<std::size_t>(size_bound(r, 1, q)) + rng() % 30;
    auto seq = brute::random_seq_with_sum(1, r, n, brute::random_target(1, q, rng), rng);
    expect_trim(seq, q, trim_to_sum(seq, q));
    expect_trim(seq, q, trim_to_sum_iterative(seq, q));
  }
}

TEST(SequenceText, RoundTrip) {
  IntVecSeq seq(2, 3, {1, -3, 0, 2, 3, 3});
  std::stringstream ss;
  write_sequence(ss, seq, 4);
  auto back = read_sequence(ss);
  EXPECT_EQ(back.q, 4);
  ASSERT_EQ(back.seq.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i)
    for (int c = 0; c < 2; ++c) EXPECT_EQ(back.seq[i][c], seq[i][c]);
}

TEST(SequenceText, Errors) {
  auto parse_line = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_sequence(in);
    } catch (const repnum::ParseError& e) {
      return e.offset();
    }
    return 0;
  };
  EXPECT_EQ(parse_line("1 1 0 2\n1\n2\n"), 3u);
  EXPECT_EQ(parse_line("1 1 0 2\n1\n"), 3u);
  EXPECT_EQ(parse_line("x\n"), 1u);
  EXPECT_EQ(parse_line("2 1 0 1\n1 1 1\n"), 2u);
}
