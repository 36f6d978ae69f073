#include <doctest.h>

#include <vector>

#include "qrds/errors.hpp"
#include "qrds/star_sum.hpp"

using qrds::LaurentSeries;

TEST_CASE("convergent terms give the classical sum") {
  std::vector<LaurentSeries> terms;
  for (int n = 0; n < 20; ++n) terms.push_back(LaurentSeries::monomial(1, n, 10));
  auto expected = LaurentSeries::one(10);
  expected.div_binomial(1, 1);
  CHECK(qrds::star_sum(terms, 10) == expected);
}

TEST_CASE("alternating constants average to one") {
  std::vector<LaurentSeries> terms;
  for (int n = 0; n < 12; ++n) terms.push_back(LaurentSeries::monomial(n % 2 ? -2 : 2, 0, 3));
  CHECK(qrds::star_sum(terms, 3) == LaurentSeries::one(3));
}

TEST_CASE("eventually periodic terms") {
  // 1, q, then (1 + q^2), -(1 + q^2), ...
  std::vector<LaurentSeries> terms{LaurentSeries::one(5), LaurentSeries::monomial(1, 1, 5)};
  for (int n = 0; n < 12; ++n) {
    auto t = LaurentSeries::one(5) + LaurentSeries::monomial(1, 2, 5);
    if (n % 2) t.negate();
    terms.push_back(t);
  }
  const auto s = qrds::star_sum(terms, 5);
  CHECK(s.coeff(0) == qrds::Rational(3, 2));
  CHECK(s.coeff(1) == 1);
  CHECK(s.coeff(2) == qrds::Rational(1, 2));
}

TEST_CASE("non-periodic terms raise NoStabilization") {
  std::vector<LaurentSeries> terms;
  for (int n = 0; n < 200; ++n) terms.push_back(LaurentSeries::monomial(n, 0, 4));
  CHECK_THROWS_AS(qrds::star_sum(terms, 4, 50), qrds::NoStabilization);
}

TEST_CASE("constant nonzero terms drift") {
  std::vector<LaurentSeries> terms(20, LaurentSeries::one(2));
  CHECK_THROWS_AS(qrds::star_sum(terms, 2), qrds::NoStabilization);
}

TEST_CASE("running out of terms is not a result") {
  std::vector<LaurentSeries> terms{LaurentSeries::one(2), LaurentSeries::monomial(-1, 0, 2)};
  CHECK_THROWS_AS(qrds::star_sum(terms, 2), qrds::NoStabilization);
}

TEST_CASE("default budget") { CHECK(qrds::default_star_budget(300) == 1264); }
