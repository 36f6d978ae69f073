#pragma once

#include <cstdint>

#include "qrds/series.hpp"

namespace qrds {

/// The finite product (c q^j; q^s)_len = prod_{i=0}^{len-1} (1 - c q^{j + s i})
/// where both the start power j and the length are affine in an integer
/// argument x:  j = power + power_scale * x,  len = length_scale * x + length_shift.
///
/// (q)_n is {1, 1, 1, 1, 0};  (q)_{n-1} is {1, 1, 1, 1, -1};  (q^n;q)_n is
/// {1, 0, 1, 1, 0, power_scale = 1};  (1 - q^{2k-1}) is {1, -1, 1, 0, 1, power_scale = 2}.
struct PochhammerSpec {
  int sign = 1;
  std::int64_t power = 1;
  std::int64_t step = 1;
  std::int64_t length_scale = 1;
  std::int64_t length_shift = 0;
  std::int64_t power_scale = 0;

  std::int64_t start_power(std::int64_t x) const { return power + power_scale * x; }
  /// Throws BadLength when the length at x is negative.
  std::int64_t length(std::int64_t x) const;
  /// Exponent of the i-th factor at argument x.
  std::int64_t factor_power(std::int64_t x, std::int64_t i) const {
    return start_power(x) + step * i;
  }
};

namespace poch {
// (q;q)_{n + shift}
inline constexpr PochhammerSpec q(std::int64_t shift = 0) { return {1, 1, 1, 1, shift, 0}; }
// (-q;q)_{n + shift}
inline constexpr PochhammerSpec minus_q(std::int64_t shift = 0) { return {-1, 1, 1, 1, shift, 0}; }
// (-1;q)_n
inline constexpr PochhammerSpec minus_one() { return {-1, 0, 1, 1, 0, 0}; }
// (q;q^2)_{n + shift}
inline constexpr PochhammerSpec q_step2(std::int64_t shift = 0) { return {1, 1, 2, 1, shift, 0}; }
// (q^2;q^2)_{n + shift}
inline constexpr PochhammerSpec q2(std::int64_t shift = 0) { return {1, 2, 2, 1, shift, 0}; }
// (q^n;q)_{n + shift}
inline constexpr PochhammerSpec q_to_n(std::int64_t shift = 0) { return {1, 0, 1, 1, shift, 1}; }
// single factor (1 - q^{2x + shift})
inline constexpr PochhammerSpec odd_binomial(std::int64_t shift) { return {1, shift, 1, 0, 1, 2}; }
}  // namespace poch

/// The product evaluated at argument n, truncated to order.
LaurentSeries qpoch(const PochhammerSpec& spec, std::int64_t n, Exponent order = kExactOrder);

/// s *= (spec at n) or s /= (spec at n), one binomial at a time.
void multiply_qpoch(LaurentSeries& s, const PochhammerSpec& spec, std::int64_t n);
void divide_qpoch(LaurentSeries& s, const PochhammerSpec& spec, std::int64_t n);

/// True when the product at n + 1 is the product at n times extra factors,
/// i.e. the start power does not move with the argument.
bool advances_incrementally(const PochhammerSpec& spec);

/// Applies the ratio (spec at n+1) / (spec at n) to s (or its inverse when
/// divide is set). Requires advances_incrementally(spec).
void advance_qpoch(LaurentSeries& s, const PochhammerSpec& spec, std::int64_t n, bool divide);

}  // namespace qrds
