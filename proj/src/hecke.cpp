#include "qrds/hecke.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qrds/errors.hpp"

namespace qrds {

namespace {

constexpr int kStopRun = 4;

HeckeBlock blk(std::int64_t sign, std::int64_t n0, std::int64_t p, std::int64_t r, std::int64_t A,
               std::int64_t B, std::int64_t C, std::int64_t D, std::int64_t E) {
  HeckeBlock b;
  b.sign = sign;
  b.n0 = n0;
  b.p = p;
  b.r = r;
  b.A = A;
  b.B = B;
  b.C = C;
  b.D = D;
  b.E = E;
  return b;
}

HeckeBlockSet set_of(std::vector<HeckeBlock> blocks, std::vector<HeckeConstant> constants = {}) {
  return {std::move(blocks), std::move(constants)};
}

std::map<SeriesId, HeckeBlockSet> build_catalog() {
  std::map<SeriesId, HeckeBlockSet> m;

  // (-1)^{n+j} q^{n(3n+1)/2 - j^2} (1 - q^{2n+1}), -n <= j <= n
  HeckeBlock sigma = blk(1, 0, 0, 0, 3, 1, 0, -1, 0);
  sigma.den = 2;
  sigma.sn = 1;
  sigma.sj = 1;
  sigma.factor = std::pair<std::int64_t, std::int64_t>{2, 1};
  m[SeriesId::sigma] = set_of({sigma});

  m[SeriesId::L1] = set_of({blk(1, 1, 0, -1, 8, -1, 0, -4, -3), blk(1, 1, 0, -1, 8, 1, 0, -4, -3),
                            blk(1, 0, 0, 0, 8, 7, 2, -4, -1), blk(1, 0, 0, 0, 8, 9, 3, -4, -1)});
  m[SeriesId::L2] = set_of({blk(1, 0, 0, 0, 8, 3, 0, -4, -1), blk(1, 0, 0, 0, 8, 13, 5, -4, -1),
                            blk(1, 0, -1, 0, 8, 11, 3, -4, -3), blk(1, 0, -1, 0, 8, 21, 13, -4, -3)});
  m[SeriesId::L3] = set_of({blk(1, 1, 0, -1, 8, -1, 1, -4, -1), blk(1, 1, 0, -1, 8, 1, 1, -4, -1),
                            blk(1, 0, 0, 0, 8, 7, 2, -4, -3), blk(1, 0, 0, 0, 8, 9, 3, -4, -3)});
  m[SeriesId::L4] = set_of({blk(1, 0, 0, 0, 8, 3, 0, -4, -3), blk(1, 0, 0, 0, 8, 13, 5, -4, -3),
                            blk(1, 0, -1, 0, 8, 11, 4, -4, -1), blk(1, 0, -1, 0, 8, 21, 14, -4, -1)},
                           {{-1, 0}});

  m[SeriesId::L5] = set_of({blk(2, 1, 0, -1, 6, 0, 1, -2, 0), blk(2, 0, 0, 0, 6, 6, 2, -2, -2)});
  // constant 2 in the second block: with 1 the sum picks up a stray 2q
  m[SeriesId::L6] = set_of({blk(2, 1, 0, -1, 6, 0, 0, -2, -2), blk(2, 0, 0, 0, 6, 6, 2, -2, 0)});
  m[SeriesId::L7] = set_of({blk(1, 0, -1, 0, 6, 16, 10, -2, -2), blk(1, 0, -1, 0, 6, 8, 2, -2, -2),
                            blk(1, 0, 0, 0, 6, 2, 0, -2, 0), blk(1, 0, 0, 0, 6, 10, 4, -2, 0)});
  m[SeriesId::L8] = set_of({blk(1, 0, 0, 0, 6, 2, 0, -2, -2), blk(1, 0, 0, 0, 6, 10, 4, -2, -2),
                            blk(1, 0, -1, 0, 6, 16, 11, -2, 0), blk(1, 0, -1, 0, 6, 8, 3, -2, 0)},
                           {{-1, 0}});

  m[SeriesId::L9] = set_of({blk(2, 1, 0, -1, 6, 0, 0, -4, -3), blk(2, 0, 0, 0, 6, 6, 2, -4, -1)});
  m[SeriesId::L10] = set_of({blk(2, 1, 0, -1, 6, 0, 1, -4, -1), blk(2, 0, 0, 0, 6, 6, 2, -4, -3)});
  m[SeriesId::L11] = set_of({blk(1, 0, 0, 0, 6, 2, 0, -4, -1), blk(1, 0, 0, 0, 6, 10, 4, -4, -1),
                             blk(1, 0, -1, 0, 6, 16, 10, -4, -3), blk(1, 0, -1, 0, 6, 8, 2, -4, -3)});
  m[SeriesId::L12] = set_of({blk(1, 0, 0, 0, 6, 2, 0, -4, -3), blk(1, 0, 0, 0, 6, 10, 4, -4, -3),
                             blk(1, 0, -1, 0, 6, 16, 11, -4, -1), blk(1, 0, -1, 0, 6, 8, 3, -4, -1)},
                            {{-2, 0}});
  return m;
}

}  // namespace

Exponent HeckeBlock::exponent(std::int64_t n, std::int64_t j) const {
  const std::int64_t npart = A * n * n + B * n + C;
  if (npart % den != 0) throw std::logic_error("Hecke exponent is not integral");
  return npart / den + D * j * j + E * j;
}

std::optional<Exponent> HeckeBlock::window_min(std::int64_t n) const {
  const std::int64_t lo = jlo(n), hi = jhi(n);
  if (lo > hi) return std::nullopt;
  Exponent best = std::min(exponent(n, lo), exponent(n, hi));
  if (D > 0) {
    // convex in j: the vertex may sit inside the window
    for (std::int64_t j : {(-E) / (2 * D) - 1, (-E) / (2 * D), (-E) / (2 * D) + 1}) {
      if (j >= lo && j <= hi) best = std::min(best, exponent(n, j));
    }
  }
  return best;
}

HeckeBlock HeckeBlock::mirrored() const {
  HeckeBlock m = *this;
  m.p = -r;
  m.r = -p;
  m.E = -E;
  return m;
}

namespace {

// Accumulates integer coefficients at exponents base .. base + size - 1.
struct Accumulator {
  Exponent base;
  std::vector<Integer> c;
  void add(Exponent e, std::int64_t v) {
    if (e < base) {
      c.insert(c.begin(), static_cast<std::size_t>(base - e), Integer(0));
      base = e;
    }
    const auto i = static_cast<std::size_t>(e - base);
    if (i >= c.size()) c.resize(i + 1);
    c[i] += v;
  }
};

void accumulate_block(const HeckeBlock& b, Exponent order, std::int64_t budget, Accumulator& acc) {
  int run = 0;
  for (std::int64_t n = b.n0;; ++n) {
    if (n - b.n0 >= budget) throw NonTerminating("Hecke block did not leave the window");
    const auto lowest = b.window_min(n);
    if (!lowest || *lowest > order) {
      // windows are empty only for a finite prefix of n
      if (lowest && ++run >= kStopRun) break;
      continue;
    }
    run = 0;
    const std::int64_t sn = (b.sn != 0 && n % 2 != 0) ? -1 : 1;
    for (std::int64_t j = b.jlo(n); j <= b.jhi(n); ++j) {
      const Exponent e = b.exponent(n, j);
      if (e > order) continue;
      const std::int64_t sj = (b.sj != 0 && j % 2 != 0) ? -1 : 1;
      const std::int64_t v = b.sign * sn * sj;
      acc.add(e, v);
      if (b.factor) {
        const Exponent f = e + b.factor->first * n + b.factor->second;
        if (f <= order) acc.add(f, -v);
      }
    }
  }
}

}  // namespace

LaurentSeries eval_block(const HeckeBlock& block, Exponent order, std::int64_t budget) {
  return eval_blocks(HeckeBlockSet{{block}, {}}, order, budget);
}

LaurentSeries eval_blocks(const HeckeBlockSet& set, Exponent order, std::int64_t budget) {
  Accumulator acc{0, {}};
  for (const auto& b : set.blocks) accumulate_block(b, order, budget, acc);
  LaurentSeries s = LaurentSeries::from_integers(acc.base, std::move(acc.c), 1, order);
  for (const auto& k : set.constants) {
    if (k.exp <= order) s.add_monomial(k.coeff, k.exp);
  }
  return s;
}

const HeckeBlockSet& hecke_catalog(SeriesId id) {
  static const std::map<SeriesId, HeckeBlockSet> catalog = build_catalog();
  const auto it = catalog.find(id);
  if (it == catalog.end()) throw UnknownId("no Hecke-type form for " + to_string(id));
  return it->second;
}

nlohmann::json blocks_to_json(const HeckeBlockSet& set) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : set.blocks) {
    nlohmann::json j = {{"n0", b.n0}, {"p", b.p},   {"r", b.r},       {"A", b.A},
                        {"B", b.B},   {"C", b.C},   {"D", b.D},       {"E", b.E},
                        {"den", b.den}, {"sign", b.sign}, {"sn", b.sn}, {"sj", b.sj}};
    j["factor"] = b.factor ? nlohmann::json::array({b.factor->first, b.factor->second})
                           : nlohmann::json(nullptr);
    blocks.push_back(std::move(j));
  }
  nlohmann::json constants = nlohmann::json::array();
  for (const auto& k : set.constants) {
    constants.push_back({{"coeff", k.coeff.get_str()}, {"exp", k.exp}});
  }
  return {{"blocks", blocks}, {"constants", constants}};
}

}  // namespace qrds
