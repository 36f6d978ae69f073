#pragma once

// Hand-rolled generators and small comparison helpers shared by the tests.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "oracle.hpp"
#include "qrds/series.hpp"

namespace testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  // Finite polynomial, degree <= max_degree, coefficients in [-9, 9], with
  // a random Laurent offset.
  qrds::LaurentSeries polynomial(int max_degree = 20, std::int64_t max_offset = 0) {
    std::vector<long> c(static_cast<std::size_t>(uniform(1, max_degree + 1)));
    for (auto& x : c) x = static_cast<long>(uniform(-9, 9));
    return qrds::LaurentSeries::polynomial(uniform(-max_offset, max_offset), c);
  }

  // Nonzero constant term, so the inverse has valuation 0.
  qrds::LaurentSeries unit_polynomial(int max_degree = 20) {
    std::vector<long> c(static_cast<std::size_t>(uniform(1, max_degree + 1)));
    for (auto& x : c) x = static_cast<long>(uniform(-9, 9));
    while (c[0] == 0) c[0] = static_cast<long>(uniform(-9, 9));
    return qrds::LaurentSeries::polynomial(0, c);
  }

 private:
  std::mt19937_64 rng_;
};

// First exponent in [0, N] where the library series and the oracle differ.
inline std::optional<std::int64_t> differs_from(const qrds::LaurentSeries& s,
                                                const oracle::Naive& o) {
  for (int e = 0; e <= o.N(); ++e) {
    if (s.coeff(e) != o.c[static_cast<std::size_t>(e)]) return e;
  }
  return std::nullopt;
}

}  // namespace testing
