#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qrds/bailey.hpp"
#include "qrds/catalog.hpp"
#include "qrds/quad_ideals.hpp"
#include "qrds/report.hpp"

namespace qrds {

inline constexpr Exponent kDefaultTheoremOrder = 1500;
inline constexpr Exponent kDefaultCorollaryOrder = 600;
inline constexpr Exponent kDefaultSigmaOrder = 5000;
inline constexpr Exponent kDefaultBaseOrder = 300;

/// q^s L_i(q^t) = weight * SUM_{N(a) = r mod M} q^{N(a)}, together with the
/// Bailey pipeline that produces L_i: step (pair, inf, inf), then the limit
/// form, giving L_i = scale * side + constant.
struct TheoremSpec {
  int index = 0;
  SeriesId series{};
  Exponent t = 1;
  Exponent s = 0;
  IdealQuery query;
  Rational weight = 1;
  PairId pair{};
  LimitForm form{};
  Rational scale = 1;
  Rational constant = 0;
};

/// i in 1..12; throws UnknownId otherwise.
const TheoremSpec& theorem_spec(int i);

struct VerifyOptions {
  /// Base-variable order for the Hecke and Bailey legs (at least).
  Exponent base_order = kDefaultBaseOrder;
  /// Adds 1 to the coefficient of q^e of the evaluated series (base variable)
  /// before any comparison.
  std::optional<Exponent> inject_fault_at;
};

/// Bailey pipeline value of L_i at the given base order; both sides.
LimitSides theorem_pipeline(int i, Exponent base_order);

/// Legs: sum=ideals (theorem variable), sum=hecke and the two Bailey sides
/// (base variable), support in the residue class, integrality.
VerificationReport verify_theorem(int i, Exponent order = kDefaultTheoremOrder,
                                  const VerifyOptions& options = {});

/// One summand coeff * q^s F(+-q^t) of a corollary side.
struct CorollaryTerm {
  SeriesId series{};
  Rational coeff = 1;
  Exponent t = 1;
  Exponent s = 0;
  bool negate_variable = false;
};

struct CorollarySpec {
  int index = 0;
  std::vector<CorollaryTerm> lhs;
  std::vector<CorollaryTerm> rhs;
};

const CorollarySpec& corollary_spec(int j);
LaurentSeries corollary_side(const std::vector<CorollaryTerm>& side, Exponent order);
VerificationReport verify_corollary(int j, Exponent order = kDefaultCorollaryOrder);

VerificationReport verify_sigma(Exponent order = kDefaultSigmaOrder);

/// Pair relation for n <= n_max, and the relation for the (inf, inf) step of
/// the pair for n <= min(n_max, 15).
VerificationReport verify_bailey(PairId pair, std::int64_t n_max, Exponent order);

/// Every identity, sorted by id. A given order overrides each default.
std::vector<VerificationReport> verify_all(std::optional<Exponent> order = std::nullopt,
                                           const VerifyOptions& options = {});

struct DensityWindow {
  Exponent lo = 0;
  Exponent hi = 0;
  std::int64_t nonzero = 0;
};

struct LacunarityReport {
  std::string id;
  Exponent order = 0;
  std::vector<DensityWindow> windows;          // [0,1], then [2^k, 2^{k+1}-1]
  std::map<std::string, std::int64_t> values;  // coefficient value -> multiplicity
};

LacunarityReport lacunarity_report(SeriesId id, Exponent order);
nlohmann::json lacunarity_to_json(const LacunarityReport& r);

}  // namespace qrds
