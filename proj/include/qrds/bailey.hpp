#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>

#include "qrds/report.hpp"
#include "qrds/series.hpp"

namespace qrds {

enum class PairId { bk1, bk2, p1a, p1b, p2a, p2b, p3a, p3b };

inline constexpr std::array<PairId, 8> kAllPairs = {PairId::bk1, PairId::bk2, PairId::p1a,
                                                    PairId::p1b, PairId::p2a, PairId::p2b,
                                                    PairId::p3a, PairId::p3b};

std::string to_string(PairId id);
/// Case-insensitive "bk1" ... "p3b"; throws UnknownPair.
PairId parse_pair_id(std::string_view name);

/// A term rule n -> series known at least through the requested order.
using TermRule = std::function<LaurentSeries(std::int64_t n, Exponent order)>;

/// Sequences (alpha_n, beta_n) with
///   beta_n = SUM_{k=0}^{n} alpha_k / ((q)_{n-k} (aq)_{n+k}),   a = q^rel_power.
struct BaileyPair {
  std::string name;
  int rel_power = 0;  // 0: relative to 1, 1: relative to q
  bool beta0_zero = false;
  TermRule alpha;
  TermRule beta;
};

BaileyPair pair_catalog(PairId id);
BaileyPair pair_catalog(std::string_view name);

/// Checks the defining relation for every n <= n_max through the given order.
VerificationReport verify_pair_relation(const BaileyPair& pair, std::int64_t n_max, Exponent order);

/// rho = infinity, or rho = sign * q^power with power >= 0.
struct RhoSpec {
  bool infinite = true;
  int sign = 1;
  std::int64_t power = 0;

  static RhoSpec infinity() { return {}; }
  static RhoSpec monomial(int sign, std::int64_t power) { return {false, sign, power}; }
  std::string describe() const;
};

/// One application of the Bailey lemma with parameters (rho1, rho2). With
/// both infinite: alpha'_n = a^n q^{n^2} alpha_n and
/// beta'_n = SUM_k a^k q^{k^2} beta_k / (q)_{n-k}. Throws UnsupportedRho when
/// a factor (aq/rho)_n in a denominator vanishes.
///
/// beta' is evaluated column-wise with a shared cache, so sequential access
/// in n costs one binomial update per column and step.
BaileyPair bailey_step(const BaileyPair& pair, const RhoSpec& rho1, const RhoSpec& rho2);

enum class LimitForm { a1, a1also, aq, aqalso };

inline constexpr std::array<LimitForm, 4> kAllForms = {LimitForm::a1, LimitForm::a1also,
                                                       LimitForm::aq, LimitForm::aqalso};

std::string to_string(LimitForm f);
LimitForm parse_limit_form(std::string_view name);

struct LimitSides {
  LaurentSeries lhs;  // beta-weighted sum
  LaurentSeries rhs;  // alpha-weighted sum
};

/// The two sides of a specialized limiting Bailey lemma:
///   a1:     SUM_{n>=1} (-1)^n (q)_{n-1} q^{n(n+1)/2} beta_n
///         = SUM_{n>=1} (-1)^n q^{n(n+1)/2} / (1-q^n) alpha_n
///   a1also: SUM_{n>=1} (-1)_n (q)_{n-1} (-q)^n beta_n
///         = 2 SUM_{n>=1} (-q)^n / (1-q^{2n}) alpha_n
///   aq:     SUM (-1)^n (q)_n q^{n(n+1)/2} beta_n = (1-q) SUM (-1)^n q^{n(n+1)/2} alpha_n
///   aqalso: SUM* (q^2;q^2)_n (-1)^n beta_n = (1-q)/2 SUM* (-1)^n alpha_n
/// a1 and a1also need a pair relative to 1 with beta_0 = 0 (Beta0NotZero,
/// FormPairMismatch); aq and aqalso need a pair relative to q.
LimitSides limit_form(const BaileyPair& pair, LimitForm form, Exponent order);

}  // namespace qrds
