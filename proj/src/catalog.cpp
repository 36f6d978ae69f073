#include "qrds/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "qrds/errors.hpp"
#include "qrds/star_sum.hpp"

namespace qrds {

namespace {

constexpr PochhammerSpec kMinusQStep2{-1, 1, 2, 1, 0, 0};        // (-q;q^2)_n
constexpr PochhammerSpec kMinusQ2Step2Prev{-1, 2, 2, 1, -1, 0};  // (-q^2;q^2)_{n-1}
constexpr PochhammerSpec kMinusQTwice{-1, 1, 1, 2, 0, 0};        // (-q)_{2n}
constexpr PochhammerSpec kMinusQTwicePlus1{-1, 1, 1, 2, 1, 0};   // (-q)_{2n+1}

TermFactor num(PochhammerSpec s, FactorArg a = FactorArg::n) { return {s, a, false}; }
TermFactor den(PochhammerSpec s, FactorArg a = FactorArg::n) { return {s, a, true}; }

SumDefinition double_def(SeriesId id, std::int64_t start, Exponent2 e, std::vector<TermFactor> f,
                         Exponent2 bound) {
  SumDefinition d;
  d.id = id;
  d.n_start = start;
  d.k_start = start;
  d.sign_n = true;
  d.sign_k = true;
  d.exponent = e;
  d.factors = std::move(f);
  d.row_bound = bound;
  return d;
}

SumDefinition single_def(SeriesId id, std::int64_t start, bool alternating, Exponent2 e,
                         std::vector<TermFactor> f) {
  SumDefinition d;
  d.id = id;
  d.double_sum = false;
  d.n_start = start;
  d.sign_n = alternating;
  d.exponent = e;
  d.factors = std::move(f);
  d.row_bound = e;
  return d;
}

std::map<SeriesId, SumDefinition> build_definitions() {
  using A = FactorArg;
  std::map<SeriesId, SumDefinition> m;
  auto put = [&m](SumDefinition d) { m.emplace(d.id, std::move(d)); };

  // sum_{n>=0} q^{binom(n+1,2)} / (-q)_n
  put(single_def(SeriesId::sigma, 0, false, {1, 1, 0, 0, 0}, {den(poch::minus_q())}));

  // (q)_{n-1} / ((q)_{n-k} (q)_{k-1} (1-q^{2k-1})), n >= k >= 1
  const std::vector<TermFactor> shape_a = {num(poch::q(-1)), den(poch::q(), A::n_minus_k),
                                           den(poch::q(-1), A::k),
                                           den(poch::odd_binomial(-1), A::k)};
  // (q)_n / ((q)_{n-k} (q)_k (1-q^{2k+1})), n >= k >= 0
  const std::vector<TermFactor> shape_b = {num(poch::q()), den(poch::q(), A::n_minus_k),
                                           den(poch::q(), A::k), den(poch::odd_binomial(1), A::k)};
  // (-1)_n (q)_{n-1} / ((q)_{n-k} (q^2;q^2)_{k-1} (1-q^{2k-1}))
  const std::vector<TermFactor> shape_c = {num(poch::minus_one()), num(poch::q(-1)),
                                           den(poch::q(), A::n_minus_k), den(poch::q2(-1), A::k),
                                           den(poch::odd_binomial(-1), A::k)};
  // (-1)_n (q)_{n-1} / ((q)_{n-k} (q)_{k-1} (1-q^{2k-1}))
  const std::vector<TermFactor> shape_d = {num(poch::minus_one()), num(poch::q(-1)),
                                           den(poch::q(), A::n_minus_k), den(poch::q(-1), A::k),
                                           den(poch::odd_binomial(-1), A::k)};
  // (q^2;q^2)_n / ((q)_{n-k} (q^2;q^2)_k (1-q^{2k+1}))
  const std::vector<TermFactor> shape_e = {num(poch::q2()), den(poch::q(), A::n_minus_k),
                                           den(poch::q2(), A::k), den(poch::odd_binomial(1), A::k)};
  // (q^2;q^2)_n / ((q)_{n-k} (q)_k (1-q^{2k+1}))
  const std::vector<TermFactor> shape_f = {num(poch::q2()), den(poch::q(), A::n_minus_k),
                                           den(poch::q(), A::k), den(poch::odd_binomial(1), A::k)};

  put(double_def(SeriesId::L1, 1, {1, 1, 1, 1, 0}, shape_a, {1, 1, 0, 0, 2}));
  put(double_def(SeriesId::L2, 0, {1, 1, 1, 1, 0}, shape_b, {1, 1, 0, 0, 0}));
  put(double_def(SeriesId::L3, 1, {1, 1, 1, -1, 2}, shape_a, {1, 1, 0, 0, 2}));
  auto l4 = double_def(SeriesId::L4, 0, {1, 1, 1, -1, 0}, shape_b, {1, 1, 0, 0, 0});
  l4.constant = -1;
  put(l4);

  put(double_def(SeriesId::L5, 1, {0, 2, 2, -2, 2}, shape_c, {0, 2, 0, 0, 2}));
  put(double_def(SeriesId::L6, 1, {0, 2, 2, 0, 0}, shape_c, {0, 2, 0, 0, 2}));

  auto starred = [](SumDefinition d, Rational constant) {
    d.starred = true;
    d.scale = 2;
    d.constant = std::move(constant);
    return d;
  };
  put(starred(double_def(SeriesId::L7, 0, {0, 0, 2, 2, 0}, shape_e, {}), 0));
  put(starred(double_def(SeriesId::L8, 0, {0, 0, 2, 0, 0}, shape_e, {}), -1));

  put(double_def(SeriesId::L9, 1, {0, 2, 1, 1, 0}, shape_d, {0, 2, 0, 0, 2}));
  put(double_def(SeriesId::L10, 1, {0, 2, 1, -1, 2}, shape_d, {0, 2, 0, 0, 2}));
  put(starred(double_def(SeriesId::L11, 0, {0, 0, 1, 1, 0}, shape_f, {}), 0));
  put(starred(double_def(SeriesId::L12, 0, {0, 0, 1, -1, 0}, shape_f, {}), -2));

  put(single_def(SeriesId::Z2, 1, false, {0, 2, 0, 0, 0},
                 {num(kMinusQ2Step2Prev), den(kMinusQStep2)}));
  put(single_def(SeriesId::Z3, 1, true, {2, 2, 0, 0, 0}, {num(poch::q2(-1)), den(kMinusQTwice)}));
  put(single_def(SeriesId::Z4, 0, true, {2, 2, 0, 0, 0}, {num(poch::q2()), den(kMinusQTwicePlus1)}));
  // (q^n;q)_{n+1}: with length n the identity -2 Z5(q^2) = L6(q) breaks at q^6.
  put(single_def(SeriesId::Z5, 1, true, {0, 2, 0, 0, 0}, {num(poch::q2()), den(poch::q_to_n(1))}));
  return m;
}

std::int64_t factor_argument(FactorArg a, std::int64_t n, std::int64_t k) {
  switch (a) {
    case FactorArg::n:
      return n;
    case FactorArg::k:
      return k;
    case FactorArg::n_minus_k:
      return n - k;
  }
  return n;
}

int term_sign(const SumDefinition& def, std::int64_t n, std::int64_t k) {
  int s = def.sign;
  if (def.sign_n && (n % 2 != 0)) s = -s;
  if (def.double_sum && def.sign_k && (k % 2 != 0)) s = -s;
  return s;
}

// Moves a summand from row n to row n + 1 (k fixed) with binomial updates.
void advance_term(const SumDefinition& def, LaurentSeries& term, std::int64_t n, std::int64_t k,
                  Exponent order) {
  const Exponent delta = def.exponent.at(n + 1, k) - def.exponent.at(n, k);
  term.shift(delta).truncate(order);
  if (def.sign_n) term.negate();
  for (const auto& f : def.factors) {
    if (f.arg == FactorArg::k) continue;
    advance_qpoch(term, f.spec, factor_argument(f.arg, n, k), f.denominator);
  }
}

bool incremental(const SumDefinition& def) {
  return std::all_of(def.factors.begin(), def.factors.end(),
                     [](const TermFactor& f) { return advances_incrementally(f.spec); });
}

void check_row_bound(const SumDefinition& def, std::int64_t n, std::int64_t k) {
  if (def.starred) return;
  if (def.exponent.twice(n, k) < def.row_bound.twice(n, 0)) {
    throw std::logic_error("term exponent below the recorded row bound for " + to_string(def.id));
  }
}

bool past_cutoff(const SumDefinition& def, std::int64_t next_row, Exponent order) {
  return def.row_bound.twice(next_row, 0) > 2 * order;
}

EvalResult eval_single(const SumDefinition& def, Exponent order, const EvalOptions& opt,
                       std::int64_t budget) {
  LaurentSeries total = LaurentSeries::zero(order);
  const bool inc = incremental(def);
  std::optional<LaurentSeries> term;
  std::int64_t rows = 0;
  for (std::int64_t n = def.n_start;; ++n) {
    if (rows >= budget) throw NonTerminating("row budget exhausted for " + to_string(def.id));
    ++rows;
    check_row_bound(def, n, 0);
    if (def.exponent.at(n, 0) <= order) {
      if (inc && term) {
        advance_term(def, *term, n - 1, 0, order);
      } else {
        term = build_term(def, n, 0, order);
      }
      total += *term;
    } else {
      term.reset();
    }
    if (past_cutoff(def, n + 1, order) && rows >= opt.min_rows) break;
  }
  return {std::move(total), rows};
}

struct Column {
  std::int64_t k;
  LaurentSeries term;
};

EvalResult eval_double(const SumDefinition& def, Exponent order, const EvalOptions& opt,
                       std::int64_t budget) {
  for (const auto& f : def.factors) {
    if (f.arg != FactorArg::k && !advances_incrementally(f.spec)) {
      throw std::logic_error("double-sum factors must advance incrementally in n");
    }
  }
  std::vector<Column> columns;
  LaurentSeries total = LaurentSeries::zero(order);
  std::optional<StarSummer> summer;
  if (def.starred) summer.emplace(order, budget);
  std::int64_t rows = 0;

  for (std::int64_t n = def.n_start;; ++n) {
    if (rows >= budget) throw NonTerminating("row budget exhausted for " + to_string(def.id));
    ++rows;
    // advance surviving columns from n - 1; exponents never decrease in n
    std::erase_if(columns, [&](Column& c) {
      if (def.exponent.at(n, c.k) > order) return true;
      advance_term(def, c.term, n - 1, c.k, order);
      return false;
    });
    const std::int64_t first_new = n == def.n_start ? def.k_start : n;
    for (std::int64_t k = std::max(first_new, def.k_start); k <= n; ++k) {
      if (def.exponent.at(n, k) <= order) columns.push_back({k, build_term(def, n, k, order)});
    }
    LaurentSeries row = LaurentSeries::zero(order);
    for (const auto& c : columns) {
      check_row_bound(def, n, c.k);
      row += c.term;
    }
    if (summer) {
      if (summer->push(row)) break;
    } else {
      total += row;
      if (past_cutoff(def, n + 1, order) && rows >= opt.min_rows) break;
    }
  }
  if (summer) total = summer->result();
  return {std::move(total), rows};
}

}  // namespace

Exponent Exponent2::at(std::int64_t n, std::int64_t k) const {
  const std::int64_t t = twice(n, k);
  if (t % 2 != 0) throw std::logic_error("odd doubled exponent");
  return t / 2;
}

std::string to_string(SeriesId id) {
  switch (id) {
    case SeriesId::sigma:
      return "sigma";
    case SeriesId::Z2:
      return "z2";
    case SeriesId::Z3:
      return "z3";
    case SeriesId::Z4:
      return "z4";
    case SeriesId::Z5:
      return "z5";
    default:
      return "l" + std::to_string(static_cast<int>(id) - static_cast<int>(SeriesId::L1) + 1);
  }
}

SeriesId parse_series_id(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (SeriesId id : kAllSeries) {
    if (to_string(id) == lower) return id;
  }
  throw UnknownId("unknown series id '" + std::string(name) + "'");
}

SeriesId l_series(int i) {
  if (i < 1 || i > 12) throw UnknownId("L-series index out of range: " + std::to_string(i));
  return static_cast<SeriesId>(static_cast<int>(SeriesId::L1) + i - 1);
}

const SumDefinition& definition(SeriesId id) {
  static const std::map<SeriesId, SumDefinition> defs = build_definitions();
  return defs.at(id);
}

LaurentSeries build_term(const SumDefinition& def, std::int64_t n, std::int64_t k,
                         Exponent order) {
  const Exponent e = def.exponent.at(n, k);
  LaurentSeries t = LaurentSeries::monomial(term_sign(def, n, k), e, order);
  if (e > order) return t;
  for (const auto& f : def.factors) {
    if (!f.denominator) multiply_qpoch(t, f.spec, factor_argument(f.arg, n, k));
  }
  for (const auto& f : def.factors) {
    if (f.denominator) divide_qpoch(t, f.spec, factor_argument(f.arg, n, k));
  }
  return t;
}

EvalResult eval_named_detailed(SeriesId id, Exponent order, const EvalOptions& options) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  const SumDefinition& def = definition(id);
  const std::int64_t budget = options.row_budget > 0
                                  ? options.row_budget
                                  : std::max<std::int64_t>(default_star_budget(order),
                                                           options.min_rows + 1);
  EvalResult r = def.double_sum ? eval_double(def, order, options, budget)
                                : eval_single(def, order, options, budget);
  if (def.scale != 1) r.value.scale(def.scale);
  if (def.constant != 0) r.value.add_monomial(def.constant, 0);
  return r;
}

LaurentSeries eval_named(SeriesId id, Exponent order, const EvalOptions& options) {
  return eval_named_detailed(id, order, options).value;
}

}  // namespace qrds
