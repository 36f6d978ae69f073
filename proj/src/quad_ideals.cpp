#include "qrds/quad_ideals.hpp"

#include <cmath>
#include <stdexcept>

#include "qrds/errors.hpp"

namespace qrds {

namespace {

std::int64_t isqrt(std::int64_t x) {
  if (x < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

bool is_square(std::int64_t x, std::int64_t& root) {
  root = isqrt(x);
  return root >= 0 && root * root == x;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> pell_fundamental(std::int64_t D) {
  if (D != 2 && D != 3 && D != 6) throw UnsupportedField("D must be 2, 3 or 6");
  for (std::int64_t y = 1;; ++y) {
    std::int64_t x = 0;
    if (is_square(1 + D * y * y, x)) return {x, y};
  }
}

FieldSpec field_spec(std::int64_t D) {
  const auto [x1, y1] = pell_fundamental(D);
  return {D, 4 * D, x1, y1};
}

std::vector<std::pair<std::int64_t, std::int64_t>> canonical_reps(const FieldSpec& f,
                                                                  std::int64_t m) {
  if (m == 0) throw std::invalid_argument("canonical_reps needs m != 0");
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  if (m > 0) {
    // the window forces u^2 <= m (x1 + 1) / 2; scan twice that far
    const std::int64_t bound = 2 * (isqrt(m * (f.x1 + 1) / 2) + 1);
    for (std::int64_t u = 1; u <= bound; ++u) {
      const std::int64_t rest = u * u - m;
      if (rest < 0 || rest % f.D != 0) continue;
      std::int64_t v = 0;
      if (!is_square(rest / f.D, v)) continue;
      for (std::int64_t s : {v, -v}) {
        if (-f.y1 * u < (f.x1 + 1) * s && (f.x1 + 1) * s <= f.y1 * u) out.emplace_back(u, s);
        if (v == 0) break;
      }
    }
  } else {
    const std::int64_t a = -m;
    // the window forces v^2 <= |m| (x1 + 1) / (2D)
    const std::int64_t bound = 2 * (isqrt(a * (f.x1 + 1) / (2 * f.D)) + 1);
    for (std::int64_t v = 1; v <= bound; ++v) {
      const std::int64_t sq = f.D * v * v - a;
      std::int64_t u = 0;
      if (!is_square(sq, u)) continue;
      for (std::int64_t s : {u, -u}) {
        if (-f.D * f.y1 * v < (f.x1 + 1) * s && (f.x1 + 1) * s <= f.D * f.y1 * v) {
          out.emplace_back(s, v);
        }
        if (u == 0) break;
      }
    }
  }
  return out;
}

int kronecker_symbol(std::int64_t a, std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("kronecker_symbol needs n >= 1");
  int result = 1;
  // factor out 2 from n: (a/2) = 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) return 0;
    const std::int64_t r = ((a % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
  }
  // n odd: Jacobi symbol by reciprocity
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

std::int64_t ideal_count(const FieldSpec& field, std::int64_t m, Restriction restriction) {
  if (m < 1) throw std::invalid_argument("ideal_count needs m >= 1");
  if (restriction == Restriction::negative_norm_generator) {
    return static_cast<std::int64_t>(canonical_reps(field, -m).size());
  }
  std::int64_t total = 0;
  for (std::int64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    total += kronecker_symbol(field.discriminant, d);
    if (d * d != m) total += kronecker_symbol(field.discriminant, m / d);
  }
  return total;
}

LaurentSeries ideal_series(const IdealQuery& query, Exponent order, const Rational& weight) {
  if (query.modulus < 1 || query.residue < 0 || query.residue >= query.modulus) {
    throw std::invalid_argument("residue must satisfy 0 <= r < M");
  }
  std::vector<Integer> coeffs;
  if (order >= 1) coeffs.resize(static_cast<std::size_t>(order), 0);
  const std::int64_t first = query.residue == 0 ? query.modulus : query.residue;
  for (std::int64_t m = first; m <= order; m += query.modulus) {
    coeffs[static_cast<std::size_t>(m - 1)] = ideal_count(query.field, m, query.restriction);
  }
  LaurentSeries s = LaurentSeries::from_integers(1, std::move(coeffs), 1, order);
  s.scale(weight);
  return s;
}

}  // namespace qrds
