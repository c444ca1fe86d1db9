#include "repnum/exact.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "repnum/errors.hpp"

namespace repnum::exact {

namespace {

bool is_fractional(const Rational& v) { return sgn(v) > 0 && v < 1; }

// Bareiss elimination on a row-major n x n matrix. nullopt on overflow.
std::optional<std::int64_t> det_int64(std::vector<std::int64_t> a,
                                      std::size_t n) {
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[p * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        std::int64_t x, y, z;
        if (__builtin_mul_overflow(a[i * n + j], a[k * n + k], &x) ||
            __builtin_mul_overflow(a[i * n + k], a[k * n + j], &y) ||
            __builtin_sub_overflow(x, y, &z)) {
          return std::nullopt;
        }
        a[i * n + j] = z / prev;  // exact by Sylvester's identity
      }
    }
    prev = a[k * n + k];
  }
  return sign * a[n * n - 1];
}

Integer det_mpz(std::vector<Integer> a, std::size_t n) {
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[p * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer z = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = std::move(z);
      }
    }
    prev = a[k * n + k];
  }
  return sign * a[n * n - 1];
}

// Cofactor kernel of dim+1 columns in dimension dim: u_j = (-1)^j det(M
// without column j). Zero when the columns have rank < dim.
std::vector<Integer> cofactor_kernel(std::span<const IntColumn> cols) {
  const std::size_t dim = cols.front().size();
  std::vector<Integer> u(cols.size());
  std::vector<std::int64_t> minor(dim * dim);
  for (std::size_t skip = 0; skip < cols.size(); ++skip) {
    std::size_t c = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (j == skip) continue;
      for (std::size_t row = 0; row < dim; ++row) minor[row * dim + c] = cols[j][row];
      ++c;
    }
    Integer det;
    if (auto fast = det_int64(minor, dim)) {
      det = static_cast<long>(*fast);
    } else {
      std::vector<Integer> wide(minor.size());
      for (std::size_t i = 0; i < minor.size(); ++i) wide[i] = static_cast<long>(minor[i]);
      det = det_mpz(std::move(wide), dim);
    }
    u[skip] = (skip % 2 == 0) ? det : Integer(-det);
  }
  return u;
}

void normalize_integer_vector(std::vector<Integer>& u) {
  Integer g = 0;
  for (const auto& v : u) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g == 0) return;
  auto first = std::find_if(u.begin(), u.end(), [](const Integer& v) { return v != 0; });
  if (sgn(*first) < 0) g = -g;
  for (auto& v : u) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

std::size_t check_columns(std::span<const IntColumn> columns) {
  if (columns.empty()) throw ContractError("solve_homogeneous_direction: no columns");
  const std::size_t dim = columns.front().size();
  if (dim == 0) throw ContractError("solve_homogeneous_direction: empty columns");
  for (const auto& c : columns) {
    if (c.size() != dim) throw ContractError("column dimension mismatch");
  }
  return dim;
}

}  // namespace

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ContractError("make_rational: zero denominator");
  Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

std::optional<std::vector<Rational>> solve_homogeneous_direction(
    std::span<const IntColumn> columns) {
  const std::size_t dim = check_columns(columns);
  const std::size_t m = columns.size();

  // Reduced row echelon form over Q.
  std::vector<std::vector<Rational>> rows(dim, std::vector<Rational>(m));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < dim; ++i) rows[i][j] = static_cast<long>(columns[j][i]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  std::optional<std::size_t> free_col;
  for (std::size_t j = 0; j < m; ++j) {
    std::size_t p = rank;
    while (p < dim && rows[p][j] == 0) ++p;
    if (p == dim) {
      if (!free_col) free_col = j;
      continue;
    }
    std::swap(rows[rank], rows[p]);
    const Rational inv = 1 / rows[rank][j];
    for (auto& v : rows[rank]) v *= inv;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == rank || rows[i][j] == 0) continue;
      const Rational f = rows[i][j];
      for (std::size_t c = j; c < m; ++c) rows[i][c] -= f * rows[rank][c];
    }
    pivot_col.push_back(j);
    ++rank;
  }
  if (!free_col) return std::nullopt;

  std::vector<Rational> u(m);
  u[*free_col] = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    if (pivot_col[i] < *free_col) u[pivot_col[i]] = -rows[i][*free_col];
  }

  Integer lcm = 1;
  for (const auto& v : u) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  }
  std::vector<Integer> scaled(m);
  for (std::size_t j = 0; j < m; ++j) {
    scaled[j] = u[j].get_num() * (lcm / u[j].get_den());
  }
  normalize_integer_vector(scaled);
  for (std::size_t j = 0; j < m; ++j) u[j] = scaled[j];
  return u;
}

RationalPoint walk_to_vertex(RationalPoint point,
                             std::span<const IntColumn> columns) {
  if (point.support.size() != point.coords.size()) {
    throw ContractError("walk_to_vertex: support/coords length mismatch");
  }
  if (point.support.empty()) return point;

  const std::size_t dim = columns[point.support.front()].size();
  std::deque<std::size_t> pending;
  for (std::size_t pos = 0; pos < point.support.size(); ++pos) {
    const std::size_t item = point.support[pos];
    if (item >= columns.size() || columns[item].size() != dim) {
      throw ContractError("walk_to_vertex: missing or mismatched column for item " +
                          std::to_string(item));
    }
    const Rational& v = point.coords[pos];
    if (sgn(v) < 0 || v > 1) {
      throw ContractError("walk_to_vertex: coordinate outside [0,1]");
    }
    if (is_fractional(v)) pending.push_back(pos);
  }

  std::vector<std::size_t> active;
  auto refill = [&] {
    while (active.size() < dim + 1 && !pending.empty()) {
      active.push_back(pending.front());
      pending.pop_front();
    }
  };
  refill();

  std::vector<IntColumn> cols(dim + 1);
  Rational plus, minus, step;
  while (active.size() == dim + 1) {
    for (std::size_t j = 0; j < active.size(); ++j) {
      cols[j] = columns[point.support[active[j]]];
    }
    std::vector<Integer> u = cofactor_kernel(cols);
    if (std::all_of(u.begin(), u.end(), [](const Integer& v) { return v == 0; })) {
      auto q = solve_homogeneous_direction(cols);
      for (std::size_t j = 0; j < u.size(); ++j) u[j] = (*q)[j].get_num();
    }

    bool have_plus = false, have_minus = false;
    for (std::size_t j = 0; j < active.size(); ++j) {
      const int s = sgn(u[j]);
      if (s == 0) continue;
      const Rational& c = point.coords[active[j]];
      Rational to_zero = c / abs(u[j]);
      Rational to_one = (1 - c) / abs(u[j]);
      Rational& p_cand = s > 0 ? to_one : to_zero;
      Rational& m_cand = s > 0 ? to_zero : to_one;
      if (!have_plus || p_cand < plus) plus = p_cand, have_plus = true;
      if (!have_minus || m_cand < minus) minus = m_cand, have_minus = true;
    }
    step = plus <= minus ? plus : Rational(-minus);
    for (std::size_t j = 0; j < active.size(); ++j) {
      if (u[j] != 0) point.coords[active[j]] += step * u[j];
    }
    std::erase_if(active, [&](std::size_t pos) { return !is_fractional(point.coords[pos]); });
    refill();
  }
  return point;
}

std::vector<Rational> constraint_value(const RationalPoint& point,
                                       std::span<const IntColumn> columns) {
  if (point.support.empty()) return {};
  const std::size_t dim = columns[point.support.front()].size();
  std::vector<Rational> out(dim);
  for (std::size_t pos = 0; pos < point.support.size(); ++pos) {
    const auto& col = columns[point.support[pos]];
    for (std::size_t i = 0; i < dim; ++i) out[i] += point.coords[pos] * static_cast<long>(col[i]);
  }
  return out;
}

std::size_t count_fractional(const RationalPoint& point) {
  return static_cast<std::size_t>(
      std::count_if(point.coords.begin(), point.coords.end(), is_fractional));
}

}  // namespace repnum::exact
