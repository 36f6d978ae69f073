#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qrds/series.hpp"

namespace qrds {

/// Q(sqrt D) for D in {2, 3, 6}; discriminant 4D; (x1, y1) the minimal
/// positive solution of x^2 - D y^2 = 1.
struct FieldSpec {
  std::int64_t D = 0;
  std::int64_t discriminant = 0;
  std::int64_t x1 = 0;
  std::int64_t y1 = 0;
};

/// Throws UnsupportedField outside {2, 3, 6}.
FieldSpec field_spec(std::int64_t D);

/// Minimal positive (x, y) with x^2 - D y^2 = 1, by increasing search over y.
std::pair<std::int64_t, std::int64_t> pell_fundamental(std::int64_t D);

/// Solutions of u^2 - D v^2 = m (m != 0) in the fundamental window:
///   m > 0:  u > 0, -y1 u < (x1 + 1) v <= y1 u
///   m < 0:  v > 0, -D y1 v < (x1 + 1) u <= D y1 v
std::vector<std::pair<std::int64_t, std::int64_t>> canonical_reps(const FieldSpec& field,
                                                                  std::int64_t m);

/// Kronecker symbol (a / n) for n >= 1.
int kronecker_symbol(std::int64_t a, std::int64_t n);

enum class Restriction { all_ideals, negative_norm_generator };

/// all_ideals: SUM_{d | m} (disc / d). negative_norm_generator: number of
/// window representatives of u^2 - D v^2 = -m.
std::int64_t ideal_count(const FieldSpec& field, std::int64_t m, Restriction restriction);

struct IdealQuery {
  FieldSpec field;
  std::int64_t residue = 0;
  std::int64_t modulus = 1;
  Restriction restriction = Restriction::all_ideals;
};

/// SUM_{1 <= m <= order, m = residue mod modulus} weight * count(m) q^m.
LaurentSeries ideal_series(const IdealQuery& query, Exponent order, const Rational& weight);

}  // namespace qrds
