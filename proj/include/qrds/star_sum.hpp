#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "qrds/series.hpp"

namespace qrds {

/// Default term budget for star summation at a given order: 4 * order + 64.
std::int64_t default_star_budget(Exponent order);

/// Incremental star summation: the value assigned to a sum whose terms become
/// 2-periodic and alternating modulo q^(order+1) is the average of its even
/// and odd partial sums.
///
/// Stabilization is declared once T_n == T_{n-2} (mod q^(order+1)) holds for
/// four consecutive n. At that point the last two partial sums are averaged.
class StarSummer {
 public:
  explicit StarSummer(Exponent order, std::int64_t budget = 0);

  /// Feeds the next term; returns true once the value is determined. Throws
  /// NoStabilization when the budget runs out or the partial sums drift.
  bool push(const LaurentSeries& term);

  bool done() const { return done_; }
  std::int64_t terms_consumed() const { return count_; }
  LaurentSeries result() const;

 private:
  Exponent order_;
  std::int64_t budget_;
  std::int64_t count_ = 0;
  int stable_run_ = 0;
  bool done_ = false;
  std::optional<LaurentSeries> prev1_;  // T_{n-1}
  std::optional<LaurentSeries> prev2_;  // T_{n-2}
  LaurentSeries partial_;               // S_n
  LaurentSeries prev_partial_;          // S_{n-1}
};

/// Star sum of an explicit term sequence.
LaurentSeries star_sum(std::span<const LaurentSeries> terms, Exponent order,
                       std::int64_t budget = 0);

}  // namespace qrds
