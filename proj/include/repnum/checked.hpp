#pragma once

#include <cstdint>
#include <string_view>

#include "repnum/errors.hpp"

namespace repnum {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b,
                                std::string_view what) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError(std::string(what) + ": integer overflow");
  }
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b,
                                std::string_view what) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError(std::string(what) + ": integer overflow");
  }
  return out;
}

inline std::int64_t checked_pow(std::int64_t base, int exponent,
                                std::string_view what) {
  std::int64_t out = 1;
  for (int i = 0; i < exponent; ++i) out = checked_mul(out, base, what);
  return out;
}

}  // namespace repnum
