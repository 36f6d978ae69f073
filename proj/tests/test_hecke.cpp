#include <doctest.h>

#include <string>

#include "oracle.hpp"
#include "qrds/catalog.hpp"
#include "qrds/errors.hpp"
#include "qrds/hecke.hpp"
#include "support.hpp"

using qrds::HeckeBlockSet;
using qrds::LaurentSeries;
using qrds::SeriesId;

namespace {

const SeriesId kHeckeIds[] = {SeriesId::sigma, SeriesId::L1,  SeriesId::L2, SeriesId::L3,
                              SeriesId::L4,    SeriesId::L5,  SeriesId::L6, SeriesId::L7,
                              SeriesId::L8,    SeriesId::L9,  SeriesId::L10, SeriesId::L11,
                              SeriesId::L12};

}  // namespace

TEST_CASE("small Hecke evaluations") {
  const auto sigma = qrds::eval_blocks(qrds::hecke_catalog(SeriesId::sigma), 3);
  CHECK(sigma == LaurentSeries::polynomial(0, std::vector<long>{1, 1, -1, 2}).truncated(3));

  const auto l5 = qrds::eval_blocks(qrds::hecke_catalog(SeriesId::L5), 5);
  CHECK(l5 == LaurentSeries::monomial(2, 2, 5) + LaurentSeries::monomial(2, 5, 5));

  HeckeBlockSet constant_only;
  constant_only.constants.push_back({-1, 0});
  CHECK(qrds::eval_blocks(constant_only, 10) == LaurentSeries::monomial(-1, 0, 10));
}

TEST_CASE("catalog shapes") {
  CHECK(qrds::hecke_catalog(SeriesId::L1).blocks.size() == 4);
  const auto& l12 = qrds::hecke_catalog(SeriesId::L12);
  CHECK(l12.blocks.size() == 4);
  REQUIRE(l12.constants.size() == 1);
  CHECK(l12.constants[0].coeff == -2);
  const auto& sigma = qrds::hecke_catalog(SeriesId::sigma);
  REQUIRE(sigma.blocks.size() == 1);
  CHECK(sigma.blocks[0].factor.has_value());
  for (auto id : {SeriesId::Z2, SeriesId::Z3, SeriesId::Z4, SeriesId::Z5}) {
    CHECK_THROWS_AS(qrds::hecke_catalog(id), qrds::UnknownId);
  }
}

TEST_CASE("Hecke forms match brute force over a box") {
  const int N = 200;
  for (auto id : kHeckeIds) {
    const std::string name = qrds::to_string(id);
    CAPTURE(name);
    CHECK(!testing::differs_from(qrds::eval_blocks(qrds::hecke_catalog(id), N),
                                 oracle::hecke(name, N)));
  }
}

TEST_CASE("Hecke forms match the double sums") {
  const int N = 60;
  for (auto id : kHeckeIds) {
    CAPTURE(qrds::to_string(id));
    CHECK(qrds::eval_blocks(qrds::hecke_catalog(id), N) == qrds::eval_named(id, N));
  }
}

TEST_CASE("constant 1 in the second L6 block adds a stray 2q") {
  const int N = 40;
  const auto sum = oracle::named("l6", N);
  CHECK(oracle::hecke("l6", N).c == sum.c);
  const auto plus1 = oracle::hecke("l6-plus1", N);
  CHECK(plus1.c != sum.c);
  CHECK(plus1.c[1] - sum.c[1] == 2);
}

TEST_CASE("j -> -j in one block leaves the sum unchanged") {
  const qrds::Exponent N = 150;
  for (auto id : kHeckeIds) {
    const auto& set = qrds::hecke_catalog(id);
    const auto reference = qrds::eval_blocks(set, N);
    for (std::size_t b = 0; b < set.blocks.size(); ++b) {
      CAPTURE(qrds::to_string(id));
      CAPTURE(b);
      HeckeBlockSet changed = set;
      changed.blocks[b] = set.blocks[b].mirrored();
      CHECK(qrds::eval_blocks(changed, N) == reference);
      CHECK(qrds::eval_block(changed.blocks[b], N) == qrds::eval_block(set.blocks[b], N));
    }
  }
}

TEST_CASE("support after the completed-square substitution") {
  const auto l1 = qrds::eval_blocks(qrds::hecke_catalog(SeriesId::L1), 60);
  for (const auto& [e, c] : qrds::dilate_shift(l1, 32, -17).terms()) {
    CHECK(((e % 32) + 32) % 32 == 15);
  }
}

TEST_CASE("a block that never grows is NonTerminating") {
  qrds::HeckeBlock flat;
  flat.A = 1;
  flat.D = -1;
  flat.p = 0;
  flat.r = 0;
  CHECK_THROWS_AS(qrds::eval_block(flat, 10, 500), qrds::NonTerminating);
}

TEST_CASE("block json") {
  const auto j = qrds::blocks_to_json(qrds::hecke_catalog(SeriesId::L4));
  CHECK(j["blocks"].size() == 4);
  CHECK(j["constants"].size() == 1);
}
