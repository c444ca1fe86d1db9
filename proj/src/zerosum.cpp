#include "repnum/zerosum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

#include "repnum/checked.hpp"
#include "repnum/errors.hpp"

namespace repnum::zerosum {

using exact::IntColumn;
using exact::Rational;
using exact::RationalPoint;

namespace {

void check_entries(std::span<const std::int64_t> v, std::int64_t r) {
  for (auto e : v) {
    if (e < -r || e > r) {
      throw ContractError("vector entry " + std::to_string(e) + " outside [-" +
                          std::to_string(r) + ", " + std::to_string(r) + "]");
    }
  }
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

bool is_zero(std::span<const std::int64_t> v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t e) { return e == 0; });
}

IntVecSeq with_completion(const IntVecSeq& seq, std::int64_t p) {
  IntVecSeq aug = seq;
  const auto w = seq.total();
  for (const auto& v : artificial_completion(w, seq.bound(), p)) aug.push_back(v);
  return aug;
}

std::vector<std::vector<std::int64_t>> prefix_sums(const IntVecSeq& seq,
                                                   std::span<const std::size_t> order) {
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(order.size());
  std::vector<std::int64_t> running(static_cast<std::size_t>(seq.dim()), 0);
  for (std::size_t item : order) {
    const auto v = seq[item];
    for (std::size_t c = 0; c < running.size(); ++c) running[c] += v[c];
    out.push_back(running);
  }
  return out;
}

// One rearrangement of the completed sequence, then a left-to-right walk
// over prefix positions that jumps across every zero-sum window free of
// artificial items. Visited positions inside one artificial-free segment
// carry distinct prefix values, so at most (p+1)(2rd+1)^d originals are
// kept.
std::vector<std::size_t> greedy_keep(const IntVecSeq& seq, std::int64_t q) {
  const std::size_t n = seq.size();
  const std::int64_t p = ceil_div(q, seq.bound());
  const IntVecSeq aug = with_completion(seq, p);
  const PrefixRecord rec = steinitz_reorder(aug);
  const std::size_t m = aug.size();

  // prefix value at position j, j = 0..m
  auto value_at = [&](std::size_t j) -> std::vector<std::int64_t> {
    if (j == 0) return std::vector<std::int64_t>(static_cast<std::size_t>(seq.dim()), 0);
    return rec.prefix_sums[j - 1];
  };
  std::map<std::vector<std::int64_t>, std::vector<std::size_t>> positions;
  for (std::size_t j = 0; j <= m; ++j) positions[value_at(j)].push_back(j);

  std::vector<std::size_t> next_artificial(m + 1, m + 1);
  for (std::size_t j = m; j-- > 0;) {
    next_artificial[j] = rec.permutation[j] >= n ? j + 1 : next_artificial[j + 1];
  }

  std::vector<std::size_t> kept;
  std::size_t pos = 0;
  while (pos < m) {
    const std::size_t limit = next_artificial[pos];  // first artificial position > pos
    const auto& same = positions.at(value_at(pos));
    auto it = std::lower_bound(same.begin(), same.end(), limit);
    pos = *std::prev(it);
    if (pos == m) break;
    const std::size_t item = rec.permutation[pos];
    if (item < n) kept.push_back(item);
    ++pos;
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

void check_trim_preconditions(const IntVecSeq& seq, std::int64_t q) {
  if (q < 0) throw ContractError("q must be nonnegative");
  if (linf(seq.total()) > q) {
    throw ContractError("sequence sum has l-infinity norm above q = " + std::to_string(q));
  }
}

}  // namespace

IntVecSeq::IntVecSeq(int d, std::int64_t r) : d_(d), r_(r) {
  if (d < 1) throw ContractError("dimension must be positive");
  if (r < 1) throw ContractError("entry bound r must be positive");
}

IntVecSeq::IntVecSeq(int d, std::int64_t r, std::vector<std::int64_t> flat)
    : IntVecSeq(d, r) {
  if (flat.size() % static_cast<std::size_t>(d) != 0) {
    throw ContractError("flat data length is not a multiple of d");
  }
  check_entries(flat, r);
  data_ = std::move(flat);
}

void IntVecSeq::push_back(std::span<const std::int64_t> v) {
  if (v.size() != static_cast<std::size_t>(d_)) throw ContractError("vector dimension mismatch");
  check_entries(v, r_);
  data_.insert(data_.end(), v.begin(), v.end());
}

std::vector<std::int64_t> IntVecSeq::total() const {
  std::vector<std::int64_t> sum(static_cast<std::size_t>(d_), 0);
  for (std::size_t i = 0; i < data_.size(); ++i) sum[i % d_] += data_[i];
  return sum;
}

IntVecSeq IntVecSeq::subsequence(std::span<const std::size_t> indices) const {
  IntVecSeq out(d_, r_);
  out.data_.reserve(indices.size() * d_);
  for (std::size_t i : indices) {
    const auto v = (*this)[i];
    out.data_.insert(out.data_.end(), v.begin(), v.end());
  }
  return out;
}

std::int64_t linf(std::span<const std::int64_t> v) {
  std::int64_t m = 0;
  for (auto e : v) m = std::max(m, e < 0 ? -e : e);
  return m;
}

std::int64_t size_bound(std::int64_t r, int d, std::int64_t q) {
  if (r < 1 || d < 1 || q < 0) throw ContractError("size_bound needs r, d >= 1 and q >= 0");
  const char* what = "size_bound";
  const std::int64_t base = checked_add(checked_mul(checked_mul(2, r, what), d, what), 1, what);
  return checked_mul(checked_add(ceil_div(q, r), 2, what), checked_pow(base, d, what), what);
}

std::vector<std::vector<std::int64_t>> artificial_completion(
    std::span<const std::int64_t> w, std::int64_t r, std::int64_t p) {
  if (r < 1 || p < 0) throw ContractError("artificial_completion needs r >= 1, p >= 0");
  if (checked_mul(p, r, "artificial_completion") < linf(w)) {
    throw ContractError("infeasible completion: p*r is below the norm of the sum");
  }
  std::vector<std::int64_t> remaining(w.size());
  std::transform(w.begin(), w.end(), remaining.begin(), [](std::int64_t e) { return -e; });
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(static_cast<std::size_t>(p));
  for (std::int64_t i = 0; i < p; ++i) {
    std::vector<std::int64_t> v(w.size());
    for (std::size_t c = 0; c < w.size(); ++c) {
      v[c] = std::clamp(remaining[c], -r, r);
      remaining[c] -= v[c];
    }
    out.push_back(std::move(v));
  }
  return out;
}

PrefixRecord steinitz_reorder(const IntVecSeq& seq, const ChainObserver& observer) {
  if (!is_zero(seq.total())) {
    throw ContractError("steinitz_reorder: vectors do not sum to zero");
  }
  const std::size_t m = seq.size();
  const std::size_t d = static_cast<std::size_t>(seq.dim());
  const std::int64_t limit = seq.bound() * seq.dim();

  PrefixRecord rec;
  rec.permutation.resize(m);
  std::iota(rec.permutation.begin(), rec.permutation.end(), std::size_t{0});

  if (m > d) {
    std::vector<IntColumn> columns(m);
    for (std::size_t i = 0; i < m; ++i) {
      const auto v = seq[i];
      columns[i].assign(v.begin(), v.end());
      columns[i].push_back(1);
    }

    RationalPoint point;
    point.support = rec.permutation;
    point.coords.assign(m, exact::make_rational(static_cast<std::int64_t>(m - d),
                                                static_cast<std::int64_t>(m)));
    if (observer) observer({m, point});

    std::vector<std::int64_t> set_sum(d, 0);  // sum over the current set; starts at zero
    for (std::size_t k = m; k > d; --k) {
      const Rational factor = exact::make_rational(static_cast<std::int64_t>(k - 1 - d),
                                                   static_cast<std::int64_t>(k - d));
      for (auto& c : point.coords) c *= factor;
      point = exact::walk_to_vertex(std::move(point), columns);

      auto zero = std::find_if(point.coords.begin(), point.coords.end(),
                               [](const Rational& c) { return sgn(c) == 0; });
      if (zero == point.coords.end()) {
        throw InvariantError("steinitz_reorder: vertex without a zero coordinate");
      }
      const auto pos = static_cast<std::size_t>(zero - point.coords.begin());
      const std::size_t item = point.support[pos];
      point.support.erase(point.support.begin() + static_cast<std::ptrdiff_t>(pos));
      point.coords.erase(zero);
      rec.permutation[k - 1] = item;

      const auto v = seq[item];
      for (std::size_t c = 0; c < d; ++c) set_sum[c] -= v[c];
      if (linf(set_sum) > limit) {
        throw InvariantError("steinitz_reorder: chain set sum exceeds r*d");
      }
      if (observer) observer({k - 1, point});
    }
    std::copy(point.support.begin(), point.support.end(), rec.permutation.begin());
  }

  rec.prefix_sums = prefix_sums(seq, rec.permutation);
  for (const auto& s : rec.prefix_sums) {
    if (linf(s) > limit) throw InvariantError("steinitz_reorder: prefix sum exceeds r*d");
  }
  return rec;
}

ZeroSumWitness find_zero_sum_subsequence(const IntVecSeq& seq, std::int64_t q) {
  if (q < 0) throw ContractError("q must be nonnegative");
  const std::size_t n = seq.size();
  const std::int64_t bound = size_bound(seq.bound(), seq.dim(), q);
  if (static_cast<std::int64_t>(n) < bound) {
    throw ContractError("find_zero_sum_subsequence: need at least " + std::to_string(bound) +
                        " vectors, got " + std::to_string(n));
  }
  check_trim_preconditions(seq, q);

  ZeroSumWitness witness;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(seq[i])) {
      witness.indices = {i};
      witness.checked = true;
      return witness;
    }
  }

  const std::int64_t p = ceil_div(q, seq.bound());
  const IntVecSeq aug = with_completion(seq, p);
  const PrefixRecord rec = steinitz_reorder(aug);

  // First prefix value (positions 1..n+p) to occur p+2 times.
  std::map<std::vector<std::int64_t>, std::vector<std::size_t>> seen;
  const std::vector<std::size_t>* hits = nullptr;
  for (std::size_t j = 0; j < rec.prefix_sums.size() && !hits; ++j) {
    auto& list = seen[rec.prefix_sums[j]];
    list.push_back(j + 1);
    if (static_cast<std::int64_t>(list.size()) == p + 2) hits = &list;
  }
  if (!hits) throw InvariantError("find_zero_sum_subsequence: no prefix value repeats p+2 times");

  for (std::size_t l = 0; l + 1 < hits->size(); ++l) {
    const std::size_t from = (*hits)[l], to = (*hits)[l + 1];  // window is positions from+1..to
    std::vector<std::size_t> items(rec.permutation.begin() + static_cast<std::ptrdiff_t>(from),
                                   rec.permutation.begin() + static_cast<std::ptrdiff_t>(to));
    if (std::any_of(items.begin(), items.end(), [n](std::size_t i) { return i >= n; })) continue;
    if (items.empty() || items.size() >= n) {
      throw InvariantError("find_zero_sum_subsequence: window is not a proper subsequence");
    }
    std::sort(items.begin(), items.end());
    if (!is_zero(seq.subsequence(items).total())) {
      throw InvariantError("find_zero_sum_subsequence: window does not sum to zero");
    }
    witness.indices = std::move(items);
    witness.checked = true;
    return witness;
  }
  throw InvariantError("find_zero_sum_subsequence: every window holds an artificial vector");
}

std::vector<std::size_t> trim_to_sum(const IntVecSeq& seq, std::int64_t q) {
  check_trim_preconditions(seq, q);
  const auto bound = static_cast<std::size_t>(size_bound(seq.bound(), seq.dim(), q));
  std::vector<std::size_t> current(seq.size());
  std::iota(current.begin(), current.end(), std::size_t{0});
  while (current.size() > bound) {
    const auto local = greedy_keep(seq.subsequence(current), q);
    if (local.size() >= current.size()) {
      throw InvariantError("trim_to_sum: rearrangement removed nothing");
    }
    std::vector<std::size_t> next;
    next.reserve(local.size());
    for (std::size_t i : local) next.push_back(current[i]);
    current = std::move(next);
  }
  return current;
}

std::vector<std::size_t> trim_to_sum_iterative(const IntVecSeq& seq, std::int64_t q) {
  check_trim_preconditions(seq, q);
  const auto bound = static_cast<std::size_t>(size_bound(seq.bound(), seq.dim(), q));
  std::vector<std::size_t> current(seq.size());
  std::iota(current.begin(), current.end(), std::size_t{0});
  while (current.size() > bound) {
    const auto witness = find_zero_sum_subsequence(seq.subsequence(current), q);
    std::vector<bool> drop(current.size(), false);
    for (std::size_t i : witness.indices) drop[i] = true;
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < current.size(); ++i) {
      if (!drop[i]) next.push_back(current[i]);
    }
    current = std::move(next);
  }
  return current;
}

SequenceFile read_sequence(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> std::istringstream {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return std::istringstream(line);
    }
    throw ParseError("unexpected end of input", line_no + 1);
  };

  long long d = 0, r = 0, q = 0, n = 0;
  {
    auto header = next_line();
    if (!(header >> d >> r >> q >> n) || d < 1 || r < 1 || q < 0 || n < 0) {
      throw ParseError("header must be 'd r q n' with d, r >= 1 and q, n >= 0", line_no);
    }
  }
  std::vector<std::int64_t> flat;
  flat.reserve(static_cast<std::size_t>(n * d));
  for (long long i = 0; i < n; ++i) {
    auto row = next_line();
    for (long long c = 0; c < d; ++c) {
      long long e;
      if (!(row >> e)) throw ParseError("expected " + std::to_string(d) + " integers", line_no);
      if (e < -r || e > r) throw ParseError("entry outside [-r, r]", line_no);
      flat.push_back(e);
    }
    std::string extra;
    if (row >> extra) throw ParseError("too many entries on line", line_no);
  }
  return {IntVecSeq(static_cast<int>(d), r, std::move(flat)), q};
}

void write_sequence(std::ostream& out, const IntVecSeq& seq, std::int64_t q) {
  out << seq.dim() << ' ' << seq.bound() << ' ' << q << ' ' << seq.size() << '\n';
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto v = seq[i];
    for (std::size_t c = 0; c < v.size(); ++c) out << (c ? " " : "") << v[c];
    out << '\n';
  }
}

}  // namespace repnum::zerosum
