#pragma once

// Slow, independent reference evaluators used only by the tests.
//
// Power series here are plain coefficient vectors c[0..N] of rationals (no
// shared denominator, no offset, no order bookkeeping). Every Pochhammer
// product is rebuilt from scratch for each summand and every definition is
// transcribed separately from the library's tables.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace oracle {

struct Naive {
  std::vector<mpq_class> c;  // c[i] is the coefficient of q^i

  explicit Naive(int N) : c(static_cast<std::size_t>(N + 1)) {}
  int N() const { return static_cast<int>(c.size()) - 1; }

  static Naive one(int N);
  static Naive mono(const mpq_class& coeff, std::int64_t e, int N);

  Naive& operator+=(const Naive& o);
  Naive& operator-=(const Naive& o);
  Naive& operator*=(const mpq_class& k);
  friend Naive operator*(const Naive& a, const Naive& b);

  // (1 - c q^e), e >= 0
  Naive& times_binom(int sign_c, std::int64_t e);
  // 1/(1 - c q^e), e >= 1
  Naive& over_binom(int sign_c, std::int64_t e);
};

// (c q^pow; q^step)_len
Naive poch(int c, std::int64_t pow, std::int64_t step, std::int64_t len, int N);

/// Named series ("sigma", "l1".."l12", "z2".."z5", plus "z5-short" with a
/// length-n denominator) through q^N. Convergent
/// sums run to a fixed generous n bound; starred sums average the last two
/// partial sums after checking 2-periodicity of the terms.
Naive named(const std::string& id, int N);

/// Hecke-type sums evaluated by brute force over a box, from exponent
/// formulas written out independently. "l6-plus1" puts constant 1 in the
/// second L6 block.
Naive hecke(const std::string& id, int N);

}  // namespace oracle
