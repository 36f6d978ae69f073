#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qrds/catalog.hpp"
#include "qrds/series.hpp"

namespace qrds {

/// One indefinite theta block
///   SUM_{n >= n0} SUM_{-n+p <= j <= n+r}
///     sign (-1)^{sn n + sj j} q^{e(n,j)} (1 - q^{G n + H})
/// with e(n,j) = (A n^2 + B n + C) / den + D j^2 + E j. den is 1 except for
/// pentagonal-type n-parts such as n(3n+1)/2.
struct HeckeBlock {
  std::int64_t n0 = 0;
  std::int64_t p = 0;
  std::int64_t r = 0;
  std::int64_t A = 0, B = 0, C = 0, D = 0, E = 0;
  std::int64_t den = 1;
  /// Integer coefficient; +-1 for a plain sign, +-2 for a doubled block.
  std::int64_t sign = 1;
  int sn = 0;
  int sj = 0;
  std::optional<std::pair<std::int64_t, std::int64_t>> factor;

  std::int64_t jlo(std::int64_t n) const { return -n + p; }
  std::int64_t jhi(std::int64_t n) const { return n + r; }
  Exponent exponent(std::int64_t n, std::int64_t j) const;
  /// Smallest exponent over the j-window at n (nullopt for an empty window).
  std::optional<Exponent> window_min(std::int64_t n) const;

  /// The same block after j -> -j (bounds and linear term mirrored).
  HeckeBlock mirrored() const;
};

struct HeckeConstant {
  Rational coeff;
  Exponent exp = 0;
};

struct HeckeBlockSet {
  std::vector<HeckeBlock> blocks;
  std::vector<HeckeConstant> constants;
};

/// Outer-n budget used when none is given.
inline constexpr std::int64_t kDefaultHeckeBudget = 1'000'000;

/// Exact sum of every monomial with exponent <= order. A block stops after
/// four consecutive rows whose window minimum exceeds order; NonTerminating
/// if that does not happen within budget rows.
LaurentSeries eval_blocks(const HeckeBlockSet& set, Exponent order,
                          std::int64_t budget = kDefaultHeckeBudget);
LaurentSeries eval_block(const HeckeBlock& block, Exponent order,
                         std::int64_t budget = kDefaultHeckeBudget);

/// Hecke-type representation of sigma and L1..L12; UnknownId for the Z-series.
const HeckeBlockSet& hecke_catalog(SeriesId id);

nlohmann::json blocks_to_json(const HeckeBlockSet& set);

}  // namespace qrds
