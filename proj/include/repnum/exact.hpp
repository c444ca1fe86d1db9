#pragma once

// Exact rational linear algebra for walking a feasible point of
// { a in [0,1]^support : sum_i a_i * column_i = c } to a vertex.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace repnum::exact {

using Integer = mpz_class;
using Rational = mpq_class;  // kept canonical: lowest terms, positive denominator

using IntColumn = std::vector<std::int64_t>;

Rational make_rational(std::int64_t num, std::int64_t den);

// Coefficients over a set of item indices. `coords[i]` belongs to
// item `support[i]`.
struct RationalPoint {
  std::vector<std::size_t> support;
  std::vector<Rational> coords;

  bool operator==(const RationalPoint&) const = default;
};

// Nonzero u with sum_j u_j * columns[j] = 0, or nullopt when the
// columns are linearly independent. The returned entries are integers
// with gcd 1 and the first nonzero entry positive.
std::optional<std::vector<Rational>> solve_homogeneous_direction(
    std::span<const IntColumn> columns);

// Moves `point` along kernel directions of its fractional columns until
// at most `dim` coordinates lie strictly inside (0,1), where `dim` is
// the column height. `columns` is indexed by item, not by position in
// the support. Every move goes in whichever of +u/-u needs the shorter
// step; the plus side wins ties.
RationalPoint walk_to_vertex(RationalPoint point,
                             std::span<const IntColumn> columns);

// sum_i coords_i * columns[support_i], computed from scratch.
std::vector<Rational> constraint_value(const RationalPoint& point,
                                       std::span<const IntColumn> columns);

std::size_t count_fractional(const RationalPoint& point);

}  // namespace repnum::exact
