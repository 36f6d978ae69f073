#include <doctest.h>

#include "qrds/catalog.hpp"
#include "qrds/errors.hpp"
#include "qrds/hecke.hpp"
#include "qrds/verify.hpp"

using qrds::LaurentSeries;
using qrds::SeriesId;
using qrds::Status;

namespace {

qrds::Rational theorem_side_coeff(int i, qrds::Exponent e) {
  const auto& spec = qrds::theorem_spec(i);
  const auto base = qrds::eval_named(spec.series, (e - spec.s) / spec.t + 1);
  return qrds::dilate_shift(base, spec.t, spec.s).coeff(e);
}

}  // namespace

TEST_CASE("theorem table") {
  CHECK(qrds::theorem_spec(1).t == 32);
  CHECK(qrds::theorem_spec(1).s == -17);
  CHECK(qrds::theorem_spec(11).s == 5);
  CHECK(qrds::theorem_spec(12).query.modulus == 48);
  CHECK(qrds::theorem_spec(5).query.restriction == qrds::Restriction::negative_norm_generator);
  CHECK_THROWS_AS(qrds::theorem_spec(13), qrds::UnknownId);
  CHECK_THROWS_AS(qrds::corollary_spec(0), qrds::UnknownId);
}

TEST_CASE("leading anchors on the theorem side") {
  CHECK(theorem_side_coeff(2, 7) == 1);
  CHECK(theorem_side_coeff(5, 2) == 2);
  CHECK(theorem_side_coeff(8, 4) == 1);
}

TEST_CASE("every theorem at a small order") {
  for (int i = 1; i <= 12; ++i) {
    const auto r = qrds::verify_theorem(i, 400, {});
    CAPTURE(qrds::report_line(r));
    CHECK(r.passed());
    CHECK(r.legs.size() == 6);
  }
}

TEST_CASE("an injected fault is caught where it lands") {
  qrds::VerifyOptions opts;
  opts.base_order = 60;
  opts.inject_fault_at = 3;
  const auto r = qrds::verify_theorem(2, 400, opts);
  CHECK(r.status == Status::fail);
  REQUIRE(r.first_mismatch);
  CHECK(r.first_mismatch->exp == 32 * 3 + 7);
  for (const auto& leg : r.legs) {
    if (leg.name == "sum=hecke") {
      REQUIRE(leg.mismatch);
      CHECK(leg.mismatch->exp == 3);
    }
  }
}

TEST_CASE("corollaries") {
  for (int j = 1; j <= 4; ++j) {
    const auto r = qrds::verify_corollary(j, 200);
    CAPTURE(qrds::report_line(r));
    CHECK(r.passed());
  }
  const auto z3 = qrds::corollary_side(qrds::corollary_spec(2).lhs, 3);
  CHECK(z3 == LaurentSeries::monomial(-2, 2, 3) + LaurentSeries::monomial(2, 3, 3));
  const auto z5 = qrds::corollary_side(qrds::corollary_spec(4).lhs, 2);
  CHECK(z5 == LaurentSeries::monomial(2, 2, 2));
}

TEST_CASE("sigma") {
  CHECK(qrds::verify_sigma(0).passed());
  CHECK(qrds::verify_sigma(4).passed());
  CHECK(qrds::verify_sigma(1000).passed());
}

TEST_CASE("bailey checks") {
  const auto r = qrds::verify_bailey(qrds::PairId::bk2, 10, 80);
  CHECK(r.passed());
  CHECK(r.id == "bailey-bk2");
}

TEST_CASE("comparison legs need known coefficients") {
  const auto leg = qrds::compare_leg("x", LaurentSeries::one(3), LaurentSeries::one(10), 5);
  CHECK(!leg.pass);
  CHECK(!leg.note.empty());
  const auto ok = qrds::compare_leg("y", LaurentSeries::one(5), LaurentSeries::one(10), 5);
  CHECK(ok.pass);
}

TEST_CASE("json report schema") {
  const auto j = qrds::report_to_json(qrds::verify_sigma(10));
  CHECK(j["id"] == "sigma");
  CHECK(j["status"] == "pass");
  CHECK(j["first_mismatch"].is_null());
  CHECK(j.contains("elapsed_ms"));
  CHECK(j["legs"].size() == 1);
}

TEST_CASE("verify_all is sorted and complete") {
  qrds::VerifyOptions opts;
  opts.base_order = 40;
  const auto all = qrds::verify_all(40, opts);
  REQUIRE(all.size() == 17);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].id < all[i].id);
  for (const auto& r : all) {
    CAPTURE(qrds::report_line(r));
    CHECK(r.passed());
  }
}

TEST_CASE("lacunarity report") {
  const auto r = qrds::lacunarity_report(SeriesId::sigma, 1);
  REQUIRE(r.windows.size() == 1);
  CHECK(r.windows[0].nonzero == 2);
  const auto big = qrds::lacunarity_report(SeriesId::L1, 1000);
  CHECK(big.windows.back().hi == 1000);
  CHECK_THROWS(qrds::lacunarity_report(SeriesId::L1, 0));
}
