#include <doctest.h>

#include <vector>

#include "oracle.hpp"
#include "qrds/errors.hpp"
#include "qrds/pochhammer.hpp"
#include "support.hpp"

using qrds::LaurentSeries;
using qrds::PochhammerSpec;

TEST_CASE("Pochhammer examples") {
  CHECK(qrds::qpoch(qrds::poch::q(), 0) == LaurentSeries::one());
  CHECK(qrds::qpoch(qrds::poch::minus_one(), 1) == LaurentSeries::monomial(2, 0));
  const std::vector<long> q2{1, -1, -1, 1};
  CHECK(qrds::qpoch(qrds::poch::q(), 2) == LaurentSeries::polynomial(0, q2));
}

TEST_CASE("length n-1 at n = 0 is rejected") {
  CHECK_THROWS_AS(qrds::qpoch(qrds::poch::q(-1), 0), qrds::BadLength);
  CHECK_NOTHROW(qrds::qpoch(qrds::poch::q(-1), 1));
}

TEST_CASE("recurrence in the length") {
  const std::vector<PochhammerSpec> repertoire = {
      qrds::poch::q(),       qrds::poch::q(-1),     qrds::poch::q(1),     qrds::poch::minus_q(),
      qrds::poch::minus_one(), qrds::poch::q_step2(), qrds::poch::q2(),     qrds::poch::q2(-1),
      qrds::poch::minus_q(1)};
  const qrds::Exponent order = 200;
  for (const auto& spec : repertoire) {
    for (std::int64_t n = 1; n <= 30; ++n) {
      if (spec.length_scale * (n - 1) + spec.length_shift < 0) continue;
      const auto m = spec.length(n - 1);
      auto expected = qrds::qpoch(spec, n - 1, order);
      expected.mul_binomial(spec.sign, spec.start_power(0) + spec.step * m);
      CHECK(qrds::qpoch(spec, n, order) == expected);

      auto advanced = qrds::qpoch(spec, n - 1, order);
      qrds::advance_qpoch(advanced, spec, n - 1, false);
      CHECK(advanced == expected);
    }
  }
}

TEST_CASE("argument-dependent start powers against the oracle") {
  const int N = 80;
  for (std::int64_t n = 1; n <= 12; ++n) {
    const auto s = qrds::qpoch(qrds::poch::q_to_n(), n, N);
    CHECK(!testing::differs_from(s, oracle::poch(1, n, 1, n, N)));
    const auto s1 = qrds::qpoch(qrds::poch::q_to_n(1), n, N);
    CHECK(!testing::differs_from(s1, oracle::poch(1, n, 1, n + 1, N)));
    const auto odd = qrds::qpoch(qrds::poch::odd_binomial(-1), n, N);
    CHECK(!testing::differs_from(odd, oracle::poch(1, 2 * n - 1, 1, 1, N)));
  }
  auto s = LaurentSeries::one(10);
  CHECK_THROWS_AS(qrds::advance_qpoch(s, qrds::poch::q_to_n(), 1, false), std::logic_error);
}

TEST_CASE("divide undoes multiply") {
  auto s = LaurentSeries::one(50);
  qrds::multiply_qpoch(s, qrds::poch::minus_q(), 9);
  qrds::divide_qpoch(s, qrds::poch::minus_q(), 9);
  CHECK(s == LaurentSeries::one(50));
}
