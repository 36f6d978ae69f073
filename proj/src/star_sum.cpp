#include "qrds/star_sum.hpp"

#include <string>

#include "qrds/errors.hpp"

namespace qrds {

std::int64_t default_star_budget(Exponent order) { return 4 * order + 64; }

StarSummer::StarSummer(Exponent order, std::int64_t budget)
    : order_(order),
      budget_(budget > 0 ? budget : default_star_budget(order)),
      partial_(LaurentSeries::zero(order)),
      prev_partial_(LaurentSeries::zero(order)) {}

bool StarSummer::push(const LaurentSeries& term) {
  if (done_) return true;
  if (count_ >= budget_) {
    throw NoStabilization("star sum did not stabilize within " + std::to_string(budget_) +
                          " terms");
  }
  LaurentSeries t = term.truncated(order_);
  if (t.order() < order_) {
    throw std::invalid_argument("star-sum term known only to order " + std::to_string(t.order()));
  }
  prev_partial_ = partial_;
  partial_ += t;
  ++count_;
  if (prev2_ && !first_difference(t, *prev2_, order_)) {
    ++stable_run_;
  } else {
    stable_run_ = 0;
  }
  if (stable_run_ >= 4) {
    // 2-periodic terms only have a star sum when consecutive terms cancel.
    if (first_difference(t + *prev1_, LaurentSeries::zero(order_), order_)) {
      throw NoStabilization("terms are 2-periodic but partial sums drift");
    }
    done_ = true;
  }
  prev2_ = std::move(prev1_);
  prev1_ = std::move(t);
  return done_;
}

LaurentSeries StarSummer::result() const {
  if (!done_) throw NoStabilization("star sum requested before stabilization");
  LaurentSeries avg = partial_ + prev_partial_;
  avg.scale(Rational(1, 2));
  return avg;
}

LaurentSeries star_sum(std::span<const LaurentSeries> terms, Exponent order, std::int64_t budget) {
  StarSummer summer(order, budget);
  for (const auto& t : terms) {
    if (summer.push(t)) return summer.result();
  }
  throw NoStabilization("term sequence ended before the star sum stabilized");
}

}  // namespace qrds
