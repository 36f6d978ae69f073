#include "qrds/verify.hpp"

#include <algorithm>
#include <array>

#include "qrds/errors.hpp"
#include "qrds/hecke.hpp"

namespace qrds {

namespace {

Exponent ceil_div(Exponent a, Exponent b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

// Base-variable order needed so that q^s f(q^t) is known through order.
Exponent base_order_for(Exponent order, Exponent t, Exponent s) {
  return std::max<Exponent>(0, ceil_div(order - s, t));
}

TheoremSpec make_theorem(int i, Exponent t, Exponent s, std::int64_t D, std::int64_t r,
                         std::int64_t M, Restriction restriction, Rational weight, PairId pair,
                         LimitForm form, Rational scale, Rational constant) {
  TheoremSpec spec;
  spec.index = i;
  spec.series = l_series(i);
  spec.t = t;
  spec.s = s;
  spec.query = IdealQuery{field_spec(D), r, M, restriction};
  spec.weight = std::move(weight);
  spec.pair = pair;
  spec.form = form;
  spec.scale = std::move(scale);
  spec.constant = std::move(constant);
  return spec;
}

std::array<TheoremSpec, 12> build_theorems() {
  using R = Restriction;
  using F = LimitForm;
  using P = PairId;
  const Rational half(1, 2);
  return {
      make_theorem(1, 32, -17, 2, 15, 32, R::all_ideals, half, P::p2a, F::a1, 1, 0),
      make_theorem(2, 32, 7, 2, 7, 32, R::all_ideals, half, P::p2b, F::aq, 1, 0),
      make_theorem(3, 32, -33, 2, 31, 32, R::all_ideals, half, P::p3a, F::a1, 1, 0),
      make_theorem(4, 32, -9, 2, 23, 32, R::all_ideals, half, P::p3b, F::aq, 1, -1),
      make_theorem(5, 2, -2, 3, 0, 2, R::negative_norm_generator, 2, P::p1a, F::a1also, 1, 0),
      make_theorem(6, 2, -1, 3, 1, 2, R::negative_norm_generator, 2, P::bk1, F::a1also, 1, 0),
      make_theorem(7, 6, 1, 3, 1, 6, R::all_ideals, 1, P::bk2, F::aqalso, 2, 0),
      make_theorem(8, 6, -2, 3, 4, 6, R::all_ideals, 1, P::p1b, F::aqalso, 2, -1),
      make_theorem(9, 16, -9, 6, 7, 16, R::all_ideals, 1, P::p2a, F::a1also, 1, 0),
      make_theorem(10, 16, -17, 6, 15, 16, R::all_ideals, 1, P::p3a, F::a1also, 1, 0),
      make_theorem(11, 48, 5, 6, 5, 48, R::all_ideals, half, P::p2b, F::aqalso, 2, 0),
      make_theorem(12, 48, -19, 6, 29, 48, R::all_ideals, half, P::p3b, F::aqalso, 2, -2),
  };
}

std::array<CorollarySpec, 4> build_corollaries() {
  using S = SeriesId;
  return {
      CorollarySpec{1,
                    {{S::Z2, 1, 1, 0, false}},
                    {{S::L1, 1, 4, -2, false},
                     {S::L2, 1, 4, 1, false},
                     {S::L3, 1, 4, -4, false},
                     {S::L4, 1, 4, -1, false}}},
      CorollarySpec{2, {{S::Z3, 2, 1, 0, false}}, {{S::L5, -1, 2, -2, false}, {S::L6, 1, 2, -1, false}}},
      CorollarySpec{3, {{S::Z4, 1, 1, 0, true}}, {{S::L7, 1, 2, 0, false}, {S::L8, 1, 2, -1, false}}},
      CorollarySpec{4, {{S::Z5, -2, 2, 0, false}}, {{S::L6, 1, 1, 0, false}}},
  };
}

std::string theorem_id(int i) { return (i < 10 ? "theorem-0" : "theorem-") + std::to_string(i); }

template <typename Body>
VerificationReport run_report(std::string id, Exponent order, Body&& body) {
  Stopwatch clock;
  VerificationReport report;
  report.id = std::move(id);
  report.order = order;
  try {
    body(report);
  } catch (const std::exception& e) {
    report.fail_with_error(e.what());
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

LegResult support_leg(const LaurentSeries& s, std::int64_t r, std::int64_t M) {
  for (const auto& [e, c] : s.terms()) {
    if (((e % M) + M) % M != r) {
      return check_leg("support", false,
                       "nonzero coefficient at q^" + std::to_string(e) + " outside class " +
                           std::to_string(r) + " mod " + std::to_string(M));
    }
  }
  return check_leg("support", true);
}

}  // namespace

const TheoremSpec& theorem_spec(int i) {
  static const std::array<TheoremSpec, 12> specs = build_theorems();
  if (i < 1 || i > 12) throw UnknownId("theorem index must be 1..12");
  return specs[static_cast<std::size_t>(i - 1)];
}

LimitSides theorem_pipeline(int i, Exponent base_order) {
  const TheoremSpec& spec = theorem_spec(i);
  const BaileyPair stepped =
      bailey_step(pair_catalog(spec.pair), RhoSpec::infinity(), RhoSpec::infinity());
  LimitSides sides = limit_form(stepped, spec.form, base_order);
  for (LaurentSeries* side : {&sides.lhs, &sides.rhs}) {
    side->scale(spec.scale);
    if (spec.constant != 0) side->add_monomial(spec.constant, 0);
  }
  return sides;
}

VerificationReport verify_theorem(int i, Exponent order, const VerifyOptions& options) {
  return run_report(theorem_id(i), order, [&](VerificationReport& report) {
    const TheoremSpec& spec = theorem_spec(i);
    const Exponent ideal_base = base_order_for(order, spec.t, spec.s);
    const Exponent base = std::max(ideal_base, options.base_order);

    LaurentSeries value = eval_named(spec.series, base);
    if (options.inject_fault_at) value.add_monomial(1, *options.inject_fault_at);

    const LaurentSeries lhs = dilate_shift(value.truncated(ideal_base), spec.t, spec.s);
    report.add(compare_leg("sum=ideals", lhs, ideal_series(spec.query, order, spec.weight), order));
    report.add(compare_leg("sum=hecke", value, eval_blocks(hecke_catalog(spec.series), base), base));

    const LimitSides sides = theorem_pipeline(i, options.base_order);
    report.add(compare_leg("bailey-lhs=sum", sides.lhs, value, options.base_order));
    report.add(compare_leg("bailey-rhs=sum", sides.rhs, value, options.base_order));

    report.add(support_leg(lhs.truncated(order), spec.query.residue, spec.query.modulus));
    report.add(check_leg("integrality", value.is_integral(),
                         value.is_integral() ? "" : "non-integral coefficient"));
  });
}

const CorollarySpec& corollary_spec(int j) {
  static const std::array<CorollarySpec, 4> specs = build_corollaries();
  if (j < 1 || j > 4) throw UnknownId("corollary index must be 1..4");
  return specs[static_cast<std::size_t>(j - 1)];
}

LaurentSeries corollary_side(const std::vector<CorollaryTerm>& side, Exponent order) {
  LaurentSeries total = LaurentSeries::zero(order);
  for (const auto& term : side) {
    LaurentSeries f = eval_named(term.series, base_order_for(order, term.t, term.s));
    if (term.negate_variable) f = negate_variable(f);
    LaurentSeries g = dilate_shift(f, term.t, term.s);
    g.scale(term.coeff);
    total += g;
  }
  return total;
}

VerificationReport verify_corollary(int j, Exponent order) {
  return run_report("corollary-" + std::to_string(j), order, [&](VerificationReport& report) {
    const CorollarySpec& spec = corollary_spec(j);
    report.add(compare_leg("lhs=rhs", corollary_side(spec.lhs, order),
                           corollary_side(spec.rhs, order), order));
  });
}

VerificationReport verify_sigma(Exponent order) {
  return run_report("sigma", order, [&](VerificationReport& report) {
    report.add(compare_leg("sum=hecke", eval_named(SeriesId::sigma, order),
                           eval_blocks(hecke_catalog(SeriesId::sigma), order), order));
  });
}

VerificationReport verify_bailey(PairId id, std::int64_t n_max, Exponent order) {
  return run_report("bailey-" + to_string(id), order, [&](VerificationReport& report) {
    const BaileyPair pair = pair_catalog(id);
    const VerificationReport base = verify_pair_relation(pair, n_max, order);
    if (!base.error.empty()) throw Error(base.error);
    for (auto leg : base.legs) {
      leg.name = "relation " + leg.name;
      report.add(std::move(leg));
    }
    const BaileyPair stepped = bailey_step(pair, RhoSpec::infinity(), RhoSpec::infinity());
    const VerificationReport step =
        verify_pair_relation(stepped, std::min<std::int64_t>(n_max, 15), order);
    if (!step.error.empty()) throw Error(step.error);
    for (auto leg : step.legs) {
      leg.name = "step relation " + leg.name;
      report.add(std::move(leg));
    }
  });
}

std::vector<VerificationReport> verify_all(std::optional<Exponent> order,
                                           const VerifyOptions& options) {
  std::vector<VerificationReport> out;
  out.push_back(verify_sigma(order.value_or(kDefaultSigmaOrder)));
  for (int i = 1; i <= 12; ++i) {
    out.push_back(verify_theorem(i, order.value_or(kDefaultTheoremOrder), options));
  }
  for (int j = 1; j <= 4; ++j) {
    out.push_back(verify_corollary(j, order.value_or(kDefaultCorollaryOrder)));
  }
  std::sort(out.begin(), out.end(),
            [](const VerificationReport& a, const VerificationReport& b) { return a.id < b.id; });
  return out;
}

LacunarityReport lacunarity_report(SeriesId id, Exponent order) {
  if (order < 1) throw std::invalid_argument("lacunarity report needs order >= 1");
  const LaurentSeries s = eval_named(id, order);
  LacunarityReport r;
  r.id = to_string(id);
  r.order = order;
  for (Exponent lo = 0, hi = 1; lo <= order; lo = hi + 1, hi = 2 * lo - 1) {
    DensityWindow w{lo, std::min(hi, order), 0};
    for (Exponent e = w.lo; e <= w.hi; ++e) {
      if (s.numerator_at(e) != 0) ++w.nonzero;
    }
    r.windows.push_back(w);
  }
  for (const auto& [e, c] : s.terms()) {
    if (e >= 0) ++r.values[c.get_str()];
  }
  return r;
}

nlohmann::json lacunarity_to_json(const LacunarityReport& r) {
  nlohmann::json windows = nlohmann::json::array();
  for (const auto& w : r.windows) {
    const auto size = w.hi - w.lo + 1;
    windows.push_back({{"lo", w.lo},
                       {"hi", w.hi},
                       {"nonzero", w.nonzero},
                       {"density", static_cast<double>(w.nonzero) / static_cast<double>(size)}});
  }
  nlohmann::json values = nlohmann::json::object();
  for (const auto& [v, n] : r.values) values[v] = n;
  return {{"id", r.id}, {"order", r.order}, {"windows", windows}, {"values", values}};
}

}  // namespace qrds
