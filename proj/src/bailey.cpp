#include "qrds/bailey.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "qrds/errors.hpp"
#include "qrds/pochhammer.hpp"
#include "qrds/star_sum.hpp"

namespace qrds {

namespace {

constexpr int kCutoffRun = 4;

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// q^{a2 m^2 + a1 m + a0} SUM_{j=-m+lo}^{m+hi} q^{D j^2 + E j}
struct ThetaPiece {
  std::int64_t a2, a1, a0;
  std::int64_t D, E;
  std::int64_t lo, hi;
};

// alpha_n for n = 2m (even pieces) or n = 2m+1 (odd pieces), with sign +1 on
// even and -1 on odd indices. Pairs relative to 1 carry a factor (1 - q^{2n});
// pairs relative to q carry 1/(1 - q).
struct AlphaRule {
  std::vector<ThetaPiece> even;
  std::vector<ThetaPiece> odd;
};

// (-1)^n q^{(nn n^2 + n1 n + c)/2} prod(numerators) / prod(denominators)
struct BetaRule {
  std::int64_t nn, n1, c;
  std::vector<PochhammerSpec> numerators;
  std::vector<PochhammerSpec> denominators;
};

struct PairData {
  PairId id;
  int rel_power;
  bool beta0_zero;
  AlphaRule alpha;
  BetaRule beta;
};

constexpr PochhammerSpec kQTwiceMinus1{1, 1, 1, 2, -1, 0};  // (q)_{2n-1}
constexpr PochhammerSpec kQTwicePlus1{1, 1, 1, 2, 1, 0};    // (q)_{2n+1}

const std::vector<PairData>& pair_table() {
  static const std::vector<PairData> table = {
      {PairId::bk1, 0, true,
       {{{2, -2, 0, -2, -2, 0, -1}}, {{2, 0, 0, -2, 0, 0, 0}}},
       {0, 0, 0, {poch::q_step2(-1)}, {kQTwiceMinus1}}},
      {PairId::bk2, 1, false,
       {{{2, 2, 0, -2, -2, 0, -1}, {2, 0, 0, -2, 0, 0, 0}},
        {{2, 4, 2, -2, 0, 0, 0}, {2, 2, 0, -2, -2, -1, 0}}},
       {0, 0, 0, {poch::q_step2()}, {kQTwicePlus1}}},
      {PairId::p1a, 0, true,
       {{{2, -2, 1, -2, 0, 0, -1}}, {{2, 0, 0, -2, -2, 0, 0}}},
       {0, -2, 2, {}, {poch::q2(-1), poch::odd_binomial(-1)}}},
      {PairId::p1b, 1, false,
       {{{2, 0, 0, -2, -2, 0, 0}, {2, 2, 1, -2, 0, 0, -1}},
        {{2, 2, 1, -2, 0, -1, 0}, {2, 4, 2, -2, -2, 0, 0}}},
       {0, -2, 0, {}, {poch::q2(), poch::odd_binomial(1)}}},
      {PairId::p2a, 0, true,
       {{{2, -2, 0, -4, -3, 0, -1}}, {{2, 0, 0, -4, -1, 0, 0}}},
       {-1, 1, 0, {}, {poch::q(-1), poch::odd_binomial(-1)}}},
      {PairId::p2b, 1, false,
       {{{2, 0, 0, -4, -1, 0, 0}, {2, 2, 0, -4, -3, 0, -1}},
        {{2, 2, 0, -4, -3, -1, 0}, {2, 4, 2, -4, -1, 0, 0}}},
       {-1, -1, 0, {}, {poch::q(), poch::odd_binomial(1)}}},
      {PairId::p3a, 0, true,
       {{{2, -2, 1, -4, -1, 0, -1}}, {{2, 0, 0, -4, -3, 0, 0}}},
       {-1, -1, 2, {}, {poch::q(-1), poch::odd_binomial(-1)}}},
      {PairId::p3b, 1, false,
       {{{2, 0, 0, -4, -3, 0, 0}, {2, 2, 1, -4, -1, 0, -1}},
        {{2, 2, 1, -4, -1, -1, 0}, {2, 4, 2, -4, -3, 0, 0}}},
       {-1, -3, 0, {}, {poch::q(), poch::odd_binomial(1)}}},
  };
  return table;
}

// Only exponents <= order are kept.
LaurentSeries theta_piece(const ThetaPiece& p, std::int64_t m, Exponent order) {
  const std::int64_t pre = p.a2 * m * m + p.a1 * m + p.a0;
  std::vector<Exponent> exps;
  for (std::int64_t j = -m + p.lo; j <= m + p.hi; ++j) {
    const Exponent e = pre + p.D * j * j + p.E * j;
    if (e <= order) exps.push_back(e);
  }
  if (exps.empty()) return LaurentSeries::zero(order);
  const auto [mn, mx] = std::minmax_element(exps.begin(), exps.end());
  std::vector<long> coeffs(static_cast<std::size_t>(*mx - *mn + 1), 0);
  for (Exponent e : exps) ++coeffs[static_cast<std::size_t>(e - *mn)];
  return LaurentSeries::polynomial(*mn, coeffs).truncate(order);
}

LaurentSeries eval_alpha(const PairData& d, std::int64_t n, Exponent order) {
  const std::int64_t m = n / 2;
  const auto& pieces = n % 2 == 0 ? d.alpha.even : d.alpha.odd;
  LaurentSeries s = LaurentSeries::zero(order);
  for (const auto& p : pieces) s += theta_piece(p, m, order);
  if (n % 2 != 0) s.negate();
  if (d.rel_power == 0) return s.mul_binomial(1, 2 * n);
  return s.div_binomial(1, 1);
}

LaurentSeries eval_beta(const PairData& d, std::int64_t n, Exponent order) {
  if (n == 0 && d.beta0_zero) return LaurentSeries::zero(order);
  const std::int64_t twice = d.beta.nn * n * n + d.beta.n1 * n + d.beta.c;
  const Exponent e = twice / 2;
  // every factor has valuation 0, so the monomial exponent is the valuation
  if (e > order) return LaurentSeries::zero(order);
  LaurentSeries s = LaurentSeries::monomial(n % 2 == 0 ? 1 : -1, e, order);
  for (const auto& f : d.beta.numerators) multiply_qpoch(s, f, n);
  for (const auto& f : d.beta.denominators) divide_qpoch(s, f, n);
  return s;
}

// ---------------------------------------------------------------------------
// Bailey lemma step

// (c q^e; q)_len as an exact polynomial.
LaurentSeries poch_poly(int c, Exponent e, std::int64_t len) {
  LaurentSeries s = LaurentSeries::one();
  for (std::int64_t i = 0; i < len; ++i) s.mul_binomial(c, e + i);
  return s;
}

struct StepShape {
  int rel_power;
  RhoSpec rho1, rho2;

  int finite_count() const { return (rho1.infinite ? 0 : 1) + (rho2.infinite ? 0 : 1); }

  // Exact polynomial (rho1)_n (rho2)_n (aq/rho1 rho2)^n with the infinite
  // limits taken.
  LaurentSeries numerator(std::int64_t n) const {
    Rational coeff = 1;
    Exponent e = 0;
    LaurentSeries s = LaurentSeries::one();
    if (finite_count() == 0) {
      e = n * n + rel_power * n;
    } else if (finite_count() == 1) {
      const RhoSpec& r = rho1.infinite ? rho2 : rho1;
      const int c = (n % 2 == 0 ? 1 : -1) * ((r.sign == -1 && n % 2 != 0) ? -1 : 1);
      coeff = c;
      e = n * (n - 1) / 2 + n * (rel_power + 1 - r.power);
      s = poch_poly(r.sign, r.power, n);
    } else {
      const int c = rho1.sign * rho2.sign;
      coeff = (c == -1 && n % 2 != 0) ? -1 : 1;
      e = n * (rel_power + 1 - rho1.power - rho2.power);
      s = poch_poly(rho1.sign, rho1.power, n) * poch_poly(rho2.sign, rho2.power, n);
    }
    s.scale(coeff);
    s.shift(e);
    return s;
  }

  // Divides by (aq/rho1)_n (aq/rho2)_n; infinite rho contributes nothing.
  void divide_denominator(LaurentSeries& s, std::int64_t n) const {
    for (const RhoSpec* r : {&rho1, &rho2}) {
      if (r->infinite) continue;
      for (std::int64_t i = 0; i < n; ++i) s.div_binomial(r->sign, rel_power + 1 - r->power + i);
    }
  }

  // The factor (aq/rho1 rho2)_{m}; identically 1 unless both rho are finite.
  bool has_x_poch() const { return finite_count() == 2; }
  int x_sign() const { return rho1.sign * rho2.sign; }
  Exponent x_power() const { return rel_power + 1 - rho1.power - rho2.power; }
};

void check_rho(const RhoSpec& r, int rel_power) {
  if (r.infinite) return;
  if (r.sign != 1 && r.sign != -1) throw UnsupportedRho("rho sign must be +1 or -1");
  if (r.power < 0) throw UnsupportedRho("rho power must be nonnegative");
  // (aq/rho)_n = prod (1 - sign q^{rel+1-power+i}) hits (1 - q^0)
  if (r.sign == 1 && r.power >= rel_power + 1) {
    throw UnsupportedRho("rho = " + r.describe() + " makes (aq/rho)_n vanish");
  }
}

// Column-wise evaluator for beta'_n = D(n)^{-1} SUM_k w_k beta_k (X)_{n-k} / (q)_{n-k}.
class StepBetaCache {
 public:
  StepBetaCache(TermRule beta, StepShape shape) : beta_(std::move(beta)), shape_(std::move(shape)) {}

  LaurentSeries get(std::int64_t n, Exponent order) {
    std::lock_guard<std::mutex> lock(mu_);
    if (!target_ || order > *target_) reset(order, order);
    for (;;) {
      while (static_cast<std::int64_t>(values_.size()) <= n) advance();
      const LaurentSeries& v = values_[static_cast<std::size_t>(n)];
      if (v.order() >= order) return v.truncated(order);
      reset(*target_, working_ + (*target_ - v.order()));
    }
  }

 private:
  struct Column {
    std::int64_t k;
    LaurentSeries value;
  };

  void reset(Exponent target, Exponent working) {
    target_ = target;
    working_ = working;
    columns_.clear();
    values_.clear();
  }

  void advance() {
    const auto n = static_cast<std::int64_t>(values_.size());
    for (auto& c : columns_) {
      const std::int64_t m = n - 1 - c.k;  // column currently holds (q)_m
      if (shape_.has_x_poch()) c.value.mul_binomial(shape_.x_sign(), shape_.x_power() + m);
      c.value.div_binomial(1, m + 1);
    }
    const LaurentSeries w = shape_.numerator(n);
    if (!w.is_zero()) {
      LaurentSeries fresh = w * beta_(n, working_ - w.valuation_bound());
      fresh.truncate(working_);
      if (!fresh.is_zero()) columns_.push_back({n, std::move(fresh)});
    }

    LaurentSeries sum = LaurentSeries::zero(working_);
    for (const auto& c : columns_) sum += c.value;
    shape_.divide_denominator(sum, n);
    values_.push_back(std::move(sum));
  }

  TermRule beta_;
  StepShape shape_;
  std::mutex mu_;
  std::optional<Exponent> target_;
  Exponent working_ = 0;
  std::vector<Column> columns_;
  std::vector<LaurentSeries> values_;
};

// Evaluates f(working order) until the result is known through order.
template <typename F>
LaurentSeries with_order(Exponent order, Exponent first_guess, F&& f) {
  Exponent working = first_guess;
  for (int attempt = 0; attempt < 64; ++attempt) {
    LaurentSeries s = f(working);
    if (s.order() >= order) return s.truncate(order);
    working += order - s.order();
  }
  throw std::logic_error("working order failed to converge");
}

// ---------------------------------------------------------------------------
// Limit forms

// Sum of term(n) for n >= start until four consecutive terms vanish through order.
template <typename Term>
LaurentSeries convergent_sum(std::int64_t start, Exponent order, Term&& term) {
  LaurentSeries total = LaurentSeries::zero(order);
  int run = 0;
  const std::int64_t budget = default_star_budget(order) + start;
  for (std::int64_t n = start; run < kCutoffRun; ++n) {
    if (n > budget) throw NonTerminating("limit form did not converge within the term budget");
    LaurentSeries t = term(n);
    if (t.order() < order) throw std::logic_error("limit-form term computed to too low an order");
    if (t.valuation_bound() > order) {
      ++run;
    } else {
      run = 0;
      total += t;
    }
  }
  return total;
}

template <typename Term>
LaurentSeries starred_sum(Exponent order, Term&& term) {
  StarSummer summer(order);
  for (std::int64_t n = 0;; ++n) {
    LaurentSeries t = term(n);
    if (t.order() < order) {
      throw std::logic_error("starred limit-form term has negative valuation");
    }
    if (summer.push(t)) break;
  }
  return summer.result();
}

LaurentSeries sign_if_odd(LaurentSeries s, std::int64_t n) {
  if (n % 2 != 0) s.negate();
  return s;
}

}  // namespace

std::string to_string(PairId id) {
  switch (id) {
    case PairId::bk1:
      return "bk1";
    case PairId::bk2:
      return "bk2";
    case PairId::p1a:
      return "p1a";
    case PairId::p1b:
      return "p1b";
    case PairId::p2a:
      return "p2a";
    case PairId::p2b:
      return "p2b";
    case PairId::p3a:
      return "p3a";
    case PairId::p3b:
      return "p3b";
  }
  return "?";
}

PairId parse_pair_id(std::string_view name) {
  const std::string lower = lowercase(name);
  for (PairId id : kAllPairs) {
    if (to_string(id) == lower) return id;
  }
  throw UnknownPair("unknown Bailey pair '" + std::string(name) + "'");
}

BaileyPair pair_catalog(PairId id) {
  const auto& table = pair_table();
  const auto it = std::find_if(table.begin(), table.end(),
                               [id](const PairData& d) { return d.id == id; });
  if (it == table.end()) throw UnknownPair("unknown Bailey pair");
  const PairData* d = &*it;
  BaileyPair p;
  p.name = to_string(id);
  p.rel_power = d->rel_power;
  p.beta0_zero = d->beta0_zero;
  p.alpha = [d](std::int64_t n, Exponent order) { return eval_alpha(*d, n, order); };
  p.beta = [d](std::int64_t n, Exponent order) { return eval_beta(*d, n, order); };
  return p;
}

BaileyPair pair_catalog(std::string_view name) { return pair_catalog(parse_pair_id(name)); }

VerificationReport verify_pair_relation(const BaileyPair& pair, std::int64_t n_max,
                                        Exponent order) {
  Stopwatch clock;
  VerificationReport report;
  report.id = "bailey-" + pair.name;
  report.order = order;
  try {
    for (std::int64_t n = 0; n <= n_max; ++n) {
      LaurentSeries rhs = LaurentSeries::zero(order);
      for (std::int64_t k = 0; k <= n; ++k) {
        LaurentSeries t = pair.alpha(k, order);
        divide_qpoch(t, poch::q(), n - k);
        divide_qpoch(t, PochhammerSpec{1, 1 + pair.rel_power, 1, 1, 0, 0}, n + k);
        rhs += t;
      }
      LegResult leg = compare_leg("n=" + std::to_string(n), pair.beta(n, order), rhs, order);
      const bool ok = leg.pass;
      report.add(std::move(leg));
      if (!ok) break;
    }
  } catch (const Error& e) {
    report.fail_with_error(e.what());
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

std::string RhoSpec::describe() const {
  if (infinite) return "inf";
  std::string s = sign < 0 ? "-" : "";
  if (power == 0) return s + "1";
  return s + (power == 1 ? "q" : "q^" + std::to_string(power));
}

BaileyPair bailey_step(const BaileyPair& pair, const RhoSpec& rho1, const RhoSpec& rho2) {
  check_rho(rho1, pair.rel_power);
  check_rho(rho2, pair.rel_power);
  const StepShape shape{pair.rel_power, rho1, rho2};

  BaileyPair out;
  out.name = pair.name + "'(" + rho1.describe() + "," + rho2.describe() + ")";
  out.rel_power = pair.rel_power;
  out.beta0_zero = pair.beta0_zero;

  TermRule alpha = pair.alpha;
  out.alpha = [alpha, shape](std::int64_t n, Exponent order) {
    const LaurentSeries w = shape.numerator(n);
    if (w.is_zero()) return LaurentSeries::zero(order);
    const Exponent wv = w.valuation_bound();
    return with_order(order, order - wv, [&](Exponent working) {
      LaurentSeries s = w * alpha(n, working);
      shape.divide_denominator(s, n);
      return s;
    });
  };
  auto cache = std::make_shared<StepBetaCache>(pair.beta, shape);
  out.beta = [cache](std::int64_t n, Exponent order) { return cache->get(n, order); };
  return out;
}

std::string to_string(LimitForm f) {
  switch (f) {
    case LimitForm::a1:
      return "a1";
    case LimitForm::a1also:
      return "a1also";
    case LimitForm::aq:
      return "aq";
    case LimitForm::aqalso:
      return "aqalso";
  }
  return "?";
}

LimitForm parse_limit_form(std::string_view name) {
  const std::string lower = lowercase(name);
  for (LimitForm f : kAllForms) {
    if (to_string(f) == lower) return f;
  }
  throw FormPairMismatch("unknown limit form '" + std::string(name) + "'");
}

LimitSides limit_form(const BaileyPair& pair, LimitForm form, Exponent order) {
  const bool needs_rel_one = form == LimitForm::a1 || form == LimitForm::a1also;
  if (needs_rel_one) {
    if (pair.rel_power != 0) {
      throw FormPairMismatch(to_string(form) + " needs a pair relative to 1, got " + pair.name);
    }
    if (!pair.beta0_zero) {
      throw Beta0NotZero(to_string(form) + " needs beta_0 = 0 for pair " + pair.name);
    }
  } else if (pair.rel_power != 1) {
    throw FormPairMismatch(to_string(form) + " needs a pair relative to q, got " + pair.name);
  }

  LimitSides out;
  switch (form) {
    case LimitForm::a1: {
      out.lhs = convergent_sum(1, order, [&](std::int64_t n) {
        const Exponent w = n * (n + 1) / 2;
        LaurentSeries t = pair.beta(n, order - w);
        multiply_qpoch(t, poch::q(-1), n);
        return sign_if_odd(t.shift(w), n);
      });
      out.rhs = convergent_sum(1, order, [&](std::int64_t n) {
        const Exponent w = n * (n + 1) / 2;
        LaurentSeries t = pair.alpha(n, order - w);
        t.shift(w).div_binomial(1, n);
        return sign_if_odd(std::move(t), n);
      });
      break;
    }
    case LimitForm::a1also: {
      out.lhs = convergent_sum(1, order, [&](std::int64_t n) {
        LaurentSeries t = pair.beta(n, order - n);
        multiply_qpoch(t, poch::minus_one(), n);
        multiply_qpoch(t, poch::q(-1), n);
        return sign_if_odd(t.shift(n), n);
      });
      out.rhs = convergent_sum(1, order, [&](std::int64_t n) {
        LaurentSeries t = pair.alpha(n, order - n);
        t.shift(n).div_binomial(1, 2 * n);
        return sign_if_odd(std::move(t), n);
      });
      out.rhs.scale(2);
      break;
    }
    case LimitForm::aq: {
      out.lhs = convergent_sum(0, order, [&](std::int64_t n) {
        const Exponent w = n * (n + 1) / 2;
        LaurentSeries t = pair.beta(n, order - w);
        multiply_qpoch(t, poch::q(), n);
        return sign_if_odd(t.shift(w), n);
      });
      out.rhs = convergent_sum(0, order, [&](std::int64_t n) {
        const Exponent w = n * (n + 1) / 2;
        return sign_if_odd(pair.alpha(n, order - w).shift(w), n);
      });
      out.rhs.mul_binomial(1, 1);
      break;
    }
    case LimitForm::aqalso: {
      LaurentSeries q2 = LaurentSeries::one(order);  // (q^2;q^2)_n
      out.lhs = starred_sum(order, [&](std::int64_t n) {
        if (n > 0) q2.mul_binomial(1, 2 * n);
        return sign_if_odd(pair.beta(n, order) * q2, n);
      });
      out.rhs = starred_sum(order, [&](std::int64_t n) { return sign_if_odd(pair.alpha(n, order), n); });
      out.rhs.mul_binomial(1, 1);
      out.rhs.scale(Rational(1, 2));
      break;
    }
  }
  return out;
}

}  // namespace qrds
