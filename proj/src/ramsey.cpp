#include <algorithm>
#include <map>

#include "repnum/checked.hpp"
#include "repnum/equalize.hpp"
#include "repnum/errors.hpp"

namespace repnum::equalize {

namespace {

using Key = std::vector<int>;  // clique sizes per colour, ascending

struct Value {
  std::int64_t value;
  bool exact;
};

// Known values R(k_1, ..., k_m), sizes ascending.
const std::map<Key, std::int64_t>& known_values() {
  static const std::map<Key, std::int64_t> table = {
      {{3, 3}, 6},  {{3, 4}, 9},  {{3, 5}, 14}, {{3, 6}, 18},   {{3, 7}, 23},
      {{3, 8}, 28}, {{3, 9}, 36}, {{4, 4}, 18}, {{4, 5}, 25}, {{3, 3, 3}, 17},
  };
  return table;
}

Value ramsey(Key key, std::map<Key, Value>& memo) {
  std::sort(key.begin(), key.end());
  if (key.front() == 1) return {1, true};
  std::erase(key, 2);
  if (key.empty()) return {2, true};
  if (key.size() == 1) return {key.front(), true};
  if (auto it = known_values().find(key); it != known_values().end()) return {it->second, true};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  std::int64_t sum = 2 - static_cast<std::int64_t>(key.size());
  for (std::size_t i = 0; i < key.size(); ++i) {
    Key smaller = key;
    --smaller[i];
    sum = checked_add(sum, ramsey(std::move(smaller), memo).value, "ramsey_upper");
  }
  const Value v{sum, false};
  memo.emplace(std::move(key), v);
  return v;
}

}  // namespace

RamseyBound ramsey_upper(int colors, int k) {
  if (colors < 1 || k < 1) throw ContractError("ramsey_upper needs colors >= 1 and k >= 1");
  std::map<Key, Value> memo;
  const Value v = ramsey(Key(static_cast<std::size_t>(colors), k), memo);
  return {colors, k, v.value, v.exact};
}

EqualizeParams threshold(int k, int r) {
  if (k < 2) throw ContractError("threshold needs k >= 2");
  if (r < 1) throw ContractError("threshold needs r >= 1");
  const char* what = "threshold";
  EqualizeParams p;
  p.k = k;
  p.r = r;
  p.s = ramsey_upper(r + 1, k).value;
  const std::int64_t base = checked_add(checked_mul(2 * static_cast<std::int64_t>(r), k - 1, what), 1, what);
  p.N = checked_mul(checked_add(p.s, 2, what), checked_pow(base, k - 1, what), what);
  p.C = std::max(checked_mul(p.s, p.s, what), checked_add(k, p.N, what));
  return p;
}

}  // namespace repnum::equalize
