#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrds/pochhammer.hpp"
#include "qrds/series.hpp"

namespace qrds {

enum class SeriesId { sigma, L1, L2, L3, L4, L5, L6, L7, L8, L9, L10, L11, L12, Z2, Z3, Z4, Z5 };

inline constexpr std::array<SeriesId, 17> kAllSeries = {
    SeriesId::sigma, SeriesId::L1,  SeriesId::L2,  SeriesId::L3,  SeriesId::L4,  SeriesId::L5,
    SeriesId::L6,    SeriesId::L7,  SeriesId::L8,  SeriesId::L9,  SeriesId::L10, SeriesId::L11,
    SeriesId::L12,   SeriesId::Z2,  SeriesId::Z3,  SeriesId::Z4,  SeriesId::Z5};

/// Canonical lowercase name: "sigma", "l1" ... "l12", "z2" ... "z5".
std::string to_string(SeriesId id);
/// Case-insensitive; throws UnknownId.
SeriesId parse_series_id(std::string_view name);
/// L_i for i in 1..12; throws UnknownId otherwise.
SeriesId l_series(int i);

enum class FactorArg { n, k, n_minus_k };

struct TermFactor {
  PochhammerSpec spec;
  FactorArg arg = FactorArg::n;
  bool denominator = false;
};

/// Twice an exponent that is quadratic in (n, k):
///   2E(n, k) = nn n^2 + n1 n + kk k^2 + k1 k + c.
struct Exponent2 {
  std::int64_t nn = 0, n1 = 0, kk = 0, k1 = 0, c = 0;
  std::int64_t twice(std::int64_t n, std::int64_t k) const {
    return nn * n * n + n1 * n + kk * k * k + k1 * k + c;
  }
  Exponent at(std::int64_t n, std::int64_t k) const;
};

/// Transcription of one named series:
///   constant + scale * SUM_{n >= n_start} SUM_{k_start <= k <= n}
///     sign (-1)^{n sign_n + k sign_k} q^{E(n,k)} prod(numerator factors) / prod(denominator factors)
/// Single sums leave double_sum unset and ignore k.
struct SumDefinition {
  SeriesId id{};
  bool double_sum = true;
  std::int64_t n_start = 0;
  std::int64_t k_start = 0;
  int sign = 1;
  bool sign_n = false;
  bool sign_k = false;
  Exponent2 exponent;
  std::vector<TermFactor> factors;
  bool starred = false;
  Rational scale = 1;
  Rational constant = 0;
  /// Twice a lower bound for every term exponent in rows >= n (k-terms unused).
  /// Convergent sums stop once it passes the target order.
  Exponent2 row_bound;
};

const SumDefinition& definition(SeriesId id);

struct EvalOptions {
  /// Keep evaluating at least this many outer rows even past the
  /// convergence cutoff (extra rows must contribute nothing).
  std::int64_t min_rows = 0;
  /// Outer-row budget; 0 selects 4 * order + 64.
  std::int64_t row_budget = 0;
};

struct EvalResult {
  LaurentSeries value;
  std::int64_t rows = 0;  // outer rows evaluated
};

EvalResult eval_named_detailed(SeriesId id, Exponent order, const EvalOptions& options = {});
LaurentSeries eval_named(SeriesId id, Exponent order, const EvalOptions& options = {});

/// One summand of a definition, built from scratch (no incremental updates).
LaurentSeries build_term(const SumDefinition& def, std::int64_t n, std::int64_t k, Exponent order);

}  // namespace qrds
