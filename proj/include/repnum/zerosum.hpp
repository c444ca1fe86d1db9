#pragma once

// Zero-sum subsequences of bounded integer vectors, via a constructive
// Steinitz rearrangement.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "repnum/exact.hpp"

namespace repnum::zerosum {

// n vectors of dimension d with every entry in [-r, r], stored row-major.
class IntVecSeq {
 public:
  IntVecSeq(int d, std::int64_t r);
  IntVecSeq(int d, std::int64_t r, std::vector<std::int64_t> flat);

  int dim() const { return d_; }
  std::int64_t bound() const { return r_; }
  std::size_t size() const { return data_.size() / static_cast<std::size_t>(d_); }
  bool empty() const { return data_.empty(); }

  std::span<const std::int64_t> operator[](std::size_t i) const {
    return {data_.data() + i * d_, static_cast<std::size_t>(d_)};
  }

  void push_back(std::span<const std::int64_t> v);
  std::vector<std::int64_t> total() const;
  IntVecSeq subsequence(std::span<const std::size_t> indices) const;

 private:
  int d_;
  std::int64_t r_;
  std::vector<std::int64_t> data_;
};

std::int64_t linf(std::span<const std::int64_t> v);

// Positions are 0-based in memory; the text format and CLI use 1-based.
struct ZeroSumWitness {
  std::vector<std::size_t> indices;  // sorted
  bool checked = false;
};

struct PrefixRecord {
  std::vector<std::size_t> permutation;  // permutation[j] = item at position j
  std::vector<std::vector<std::int64_t>> prefix_sums;  // after positions 1..n
};

// (ceil(q/r) + 2) * (2rd + 1)^d, or OverflowError.
std::int64_t size_bound(std::int64_t r, int d, std::int64_t q);

// p vectors in [-r,r]^d summing to -w, built greedily per coordinate.
std::vector<std::vector<std::int64_t>> artificial_completion(
    std::span<const std::int64_t> w, std::int64_t r, std::int64_t p);

// State of the nested-set chain after the set of size k has been fixed:
// weights on `point.support` sum to k - d and weight the vectors to zero.
struct ChainState {
  std::size_t k;
  const exact::RationalPoint& point;
};
using ChainObserver = std::function<void(const ChainState&)>;

// Orders a zero-sum sequence so every prefix sum has l-infinity norm at
// most r*d.
PrefixRecord steinitz_reorder(const IntVecSeq& seq, const ChainObserver& observer = {});

// Nonempty proper zero-sum subsequence of a sequence of at least
// size_bound(r, d, q) vectors whose sum lies in [-q, q]^d.
ZeroSumWitness find_zero_sum_subsequence(const IntVecSeq& seq, std::int64_t q);

// Indices (sorted) of a subsequence with the same sum as `seq` and at
// most size_bound(r, d, q) elements.
std::vector<std::size_t> trim_to_sum(const IntVecSeq& seq, std::int64_t q);

// Same contract as trim_to_sum, one zero-sum witness removed per round.
// Quadratic in rounds; kept as a reference for tests.
std::vector<std::size_t> trim_to_sum_iterative(const IntVecSeq& seq, std::int64_t q);

// Text format: header "d r q n", then n lines of d integers.
struct SequenceFile {
  IntVecSeq seq;
  std::int64_t q;
};
SequenceFile read_sequence(std::istream& in);
void write_sequence(std::ostream& out, const IntVecSeq& seq, std::int64_t q);

}  // namespace repnum::zerosum
