#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <utility>
#include <vector>

#include "qrds/errors.hpp"
#include "qrds/quad_ideals.hpp"
#include "support.hpp"

using qrds::FieldSpec;
using qrds::Restriction;
using Rep = std::pair<std::int64_t, std::int64_t>;

namespace {

bool in_window(const FieldSpec& f, std::int64_t u, std::int64_t v, std::int64_t m) {
  if (m > 0) return u > 0 && -f.y1 * u < (f.x1 + 1) * v && (f.x1 + 1) * v <= f.y1 * u;
  return v > 0 && -f.D * f.y1 * v < (f.x1 + 1) * u && (f.x1 + 1) * u <= f.D * f.y1 * v;
}

std::int64_t power_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b %= p;
  if (b < 0) b += p;
  for (; e > 0; e >>= 1, b = b * b % p) {
    if (e & 1) r = r * b % p;
  }
  return r;
}

// (disc / n) for even disc, from Euler's criterion on the prime factors of n.
int character_by_factoring(std::int64_t disc, std::int64_t n) {
  int result = 1;
  for (std::int64_t p = 2; n > 1; ++p) {
    if (p * p > n) p = n;
    while (n % p == 0) {
      n /= p;
      if (p == 2 || disc % p == 0) return 0;
      result *= power_mod(disc, (p - 1) / 2, p) == 1 ? 1 : -1;
    }
  }
  return result;
}

std::int64_t divisor_count_oracle(std::int64_t disc, std::int64_t m) {
  std::int64_t total = 0;
  for (std::int64_t d = 1; d <= m; ++d) {
    if (m % d == 0) total += character_by_factoring(disc, d);
  }
  return total;
}

}  // namespace

TEST_CASE("fundamental units") {
  CHECK(qrds::pell_fundamental(2) == Rep{3, 2});
  CHECK(qrds::pell_fundamental(3) == Rep{2, 1});
  CHECK(qrds::pell_fundamental(6) == Rep{5, 2});
  CHECK(qrds::field_spec(6).discriminant == 24);
  CHECK_THROWS_AS(qrds::field_spec(5), qrds::UnsupportedField);
}

TEST_CASE("window representatives") {
  auto sorted = [](std::vector<Rep> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(qrds::canonical_reps(qrds::field_spec(2), 7)) == std::vector<Rep>{{3, -1}, {3, 1}});
  CHECK(qrds::canonical_reps(qrds::field_spec(3), -2) == std::vector<Rep>{{1, 1}});
  CHECK(qrds::canonical_reps(qrds::field_spec(3), -1).empty());
}

TEST_CASE("Kronecker symbol") {
  CHECK(qrds::kronecker_symbol(8, 7) == 1);
  CHECK(qrds::kronecker_symbol(12, 5) == -1);
  CHECK(qrds::kronecker_symbol(24, 5) == 1);
  CHECK(qrds::kronecker_symbol(8, 1) == 1);
  for (std::int64_t disc : {8, 12, 24}) {
    for (std::int64_t n = 1; n <= 2000; ++n) {
      CAPTURE(disc);
      CAPTURE(n);
      CHECK(qrds::kronecker_symbol(disc, n) == character_by_factoring(disc, n));
    }
  }
}

TEST_CASE("ideal counts") {
  CHECK(qrds::ideal_count(qrds::field_spec(2), 1, Restriction::all_ideals) == 1);
  CHECK(qrds::ideal_count(qrds::field_spec(2), 7, Restriction::all_ideals) == 2);
  CHECK(qrds::ideal_count(qrds::field_spec(3), 5, Restriction::all_ideals) == 0);
  CHECK(qrds::ideal_count(qrds::field_spec(3), 2, Restriction::negative_norm_generator) == 1);
  for (std::int64_t D : {2, 3, 6}) {
    const auto f = qrds::field_spec(D);
    for (std::int64_t m = 1; m <= 300; ++m) {
      CAPTURE(D);
      CAPTURE(m);
      CHECK(qrds::ideal_count(f, m, Restriction::all_ideals) == divisor_count_oracle(4 * D, m));
    }
  }
}

TEST_CASE("the two counting paths agree") {
  for (std::int64_t D : {2, 3, 6}) {
    const auto f = qrds::field_spec(D);
    for (std::int64_t m = 1; m <= 600; ++m) {
      const auto pos = static_cast<std::int64_t>(qrds::canonical_reps(f, m).size());
      const auto neg = static_cast<std::int64_t>(qrds::canonical_reps(f, -m).size());
      const auto all = qrds::ideal_count(f, m, Restriction::all_ideals);
      CAPTURE(D);
      CAPTURE(m);
      if (D == 2) {
        CHECK(pos == all);
        CHECK(neg == all);
      } else {
        CHECK(pos + neg == all);
      }
    }
  }
}

TEST_CASE("exactly one unit translate lies in the window") {
  testing::Gen gen(2718);
  for (std::int64_t D : {2, 3, 6}) {
    const auto f = qrds::field_spec(D);
    int samples = 0;
    while (samples < 200) {
      const auto u = gen.uniform(-60, 60), v = gen.uniform(-60, 60);
      const auto m = u * u - D * v * v;
      if (m == 0 || std::abs(m) > 400) continue;
      ++samples;
      // walk the orbit down to small size, then count translates nearby
      int hits = 0;
      Rep found{};
      for (int sign : {1, -1}) {
        std::int64_t a = sign * u, b = sign * v;
        for (int k = 0; k < 8; ++k) {  // multiply by the inverse unit
          const auto a2 = f.x1 * a - f.D * f.y1 * b, b2 = f.x1 * b - f.y1 * a;
          a = a2;
          b = b2;
        }
        for (int k = 0; k < 17; ++k) {
          if (in_window(f, a, b, m)) {
            ++hits;
            found = {a, b};
          }
          const auto a2 = f.x1 * a + f.D * f.y1 * b, b2 = f.x1 * b + f.y1 * a;
          a = a2;
          b = b2;
        }
      }
      CAPTURE(D);
      CAPTURE(u);
      CAPTURE(v);
      CHECK(hits == 1);
      const auto reps = qrds::canonical_reps(f, m);
      CHECK(std::find(reps.begin(), reps.end(), found) != reps.end());
    }
  }
}

TEST_CASE("ideal count is multiplicative") {
  testing::Gen gen(161);
  for (std::int64_t D : {2, 3, 6}) {
    const auto f = qrds::field_spec(D);
    for (int trial = 0; trial < 500; ++trial) {
      const auto m = gen.uniform(1, 500), n = gen.uniform(1, 500);
      if (std::gcd(m, n) != 1) continue;
      CAPTURE(m);
      CAPTURE(n);
      CHECK(qrds::ideal_count(f, m * n, Restriction::all_ideals) ==
            qrds::ideal_count(f, m, Restriction::all_ideals) *
                qrds::ideal_count(f, n, Restriction::all_ideals));
    }
  }
}

TEST_CASE("the ramified prime above 2 divides out") {
  const auto f = qrds::field_spec(6);
  for (std::int64_t m = 1; m <= 1000; m += 2) {
    CHECK(qrds::ideal_count(f, m, Restriction::all_ideals) ==
          qrds::ideal_count(f, 2 * m, Restriction::all_ideals));
  }
}

TEST_CASE("ideal series") {
  const qrds::IdealQuery two{qrds::field_spec(2), 7, 32, Restriction::all_ideals};
  const auto s = qrds::ideal_series(two, 100, qrds::Rational(1, 2));
  CHECK(s.order() == 100);
  CHECK(s.coeff(7) == 1);
  CHECK(s.valuation() == 7);

  const qrds::IdealQuery neg{qrds::field_spec(3), 0, 2, Restriction::negative_norm_generator};
  const auto n = qrds::ideal_series(neg, 10, 2);
  CHECK(n.valuation() == 2);
  CHECK(n.coeff(2) == 2);

  const qrds::IdealQuery six{qrds::field_spec(6), 5, 48, Restriction::all_ideals};
  CHECK(qrds::ideal_series(six, 4, qrds::Rational(1, 2)).is_zero());
}
