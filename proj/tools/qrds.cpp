// qrds: evaluate and verify the real-quadratic q-series identities.
//
// Exit codes: 0 everything passed, 1 some verification failed, 2 usage or
// evaluation error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrds/bailey.hpp"
#include "qrds/catalog.hpp"
#include "qrds/errors.hpp"
#include "qrds/hecke.hpp"
#include "qrds/quad_ideals.hpp"
#include "qrds/serialize.hpp"
#include "qrds/verify.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

enum class Format { text, json, csv };

void print_series(const qrds::LaurentSeries& s, Format f) {
  switch (f) {
    case Format::json:
      std::cout << qrds::series_to_json(s).dump() << '\n';
      break;
    case Format::csv:
      std::cout << qrds::series_to_csv(s);
      break;
    case Format::text:
      std::cout << qrds::series_to_text(s) << '\n';
      break;
  }
}

Format pick_format(bool json, bool csv) {
  if (json && csv) throw CLI::ValidationError("--json and --csv are exclusive");
  return json ? Format::json : csv ? Format::csv : Format::text;
}

qrds::Rational parse_rational(const std::string& text) {
  qrds::Rational r;
  if (r.set_str(text, 10) != 0) throw CLI::ValidationError("bad rational weight '" + text + "'");
  r.canonicalize();
  return r;
}

int exit_for(const std::vector<qrds::VerificationReport>& reports) {
  int code = 0;
  for (const auto& r : reports) {
    if (r.status == qrds::Status::error) return kExitUsage;
    if (r.status == qrds::Status::fail) code = kExitFail;
  }
  return code;
}

int emit_reports(const std::vector<qrds::VerificationReport>& reports, bool json) {
  if (json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(qrds::report_to_json(r));
    std::cout << (reports.size() == 1 ? arr[0] : arr).dump(2) << '\n';
  } else {
    for (const auto& r : reports) std::cout << qrds::report_line(r) << '\n';
  }
  return exit_for(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-series engine for real quadratic double sums"};
  app.require_subcommand(1);

  // series
  auto* series = app.add_subcommand("series", "Evaluate a named series");
  std::string series_id;
  qrds::Exponent series_order = 100;
  bool series_json = false, series_csv = false;
  series->add_option("--id", series_id, "sigma, l1..l12, z2..z5")->required();
  series->add_option("--order", series_order, "truncation order")->check(CLI::NonNegativeNumber);
  series->add_flag("--json", series_json);
  series->add_flag("--csv", series_csv);

  // hecke
  auto* hecke = app.add_subcommand("hecke", "Evaluate a Hecke-type representation");
  std::string hecke_id;
  qrds::Exponent hecke_order = qrds::kDefaultBaseOrder;
  bool hecke_json = false, hecke_csv = false, hecke_blocks = false;
  hecke->add_option("--id", hecke_id, "sigma, l1..l12")->required();
  hecke->add_option("--order", hecke_order)->check(CLI::NonNegativeNumber);
  hecke->add_flag("--json", hecke_json);
  hecke->add_flag("--csv", hecke_csv);
  hecke->add_flag("--blocks", hecke_blocks, "print the block set as JSON instead");

  // ideals
  auto* ideals = app.add_subcommand("ideals", "Ideal-norm generating function");
  std::int64_t d = 2, residue = 0, modulus = 1;
  qrds::Exponent ideals_order = 100;
  bool neg_norm = false, ideals_json = false, ideals_csv = false;
  std::string weight_text = "1";
  ideals->add_option("--d", d, "2, 3 or 6")->required();
  ideals->add_option("--residue", residue);
  ideals->add_option("--modulus", modulus);
  ideals->add_option("--order", ideals_order)->check(CLI::PositiveNumber);
  ideals->add_flag("--neg-norm", neg_norm, "only principal ideals with a negative-norm generator");
  ideals->add_option("--weight", weight_text, "rational weight, e.g. 1/2");
  ideals->add_flag("--json", ideals_json);
  ideals->add_flag("--csv", ideals_csv);

  // verify
  auto* verify = app.add_subcommand("verify", "Verify identities coefficient by coefficient");
  std::optional<int> theorem, corollary;
  bool sigma = false, all = false, verify_json = false;
  std::optional<qrds::Exponent> verify_order;
  qrds::Exponent base_order = qrds::kDefaultBaseOrder;
  auto* t_opt = verify->add_option("--theorem", theorem)->check(CLI::Range(1, 12));
  auto* c_opt = verify->add_option("--corollary", corollary)->check(CLI::Range(1, 4));
  auto* s_opt = verify->add_flag("--sigma", sigma);
  auto* a_opt = verify->add_flag("--all", all);
  t_opt->excludes(c_opt, s_opt, a_opt);
  c_opt->excludes(s_opt, a_opt);
  s_opt->excludes(a_opt);
  verify->add_option("--order", verify_order)->check(CLI::NonNegativeNumber);
  verify->add_option("--base-order", base_order, "order for the Hecke and Bailey legs")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--json", verify_json);

  // bailey
  auto* bailey = app.add_subcommand("bailey", "Bailey pair checks");
  std::string pair_name;
  bool check = false, bailey_json = false;
  std::int64_t nmax = 25;
  qrds::Exponent bailey_order = qrds::kDefaultBaseOrder;
  bailey->add_option("--pair", pair_name, "bk1, bk2, p1a ... p3b")->required();
  bailey->add_flag("--check", check, "verify the pair relation (and its step)");
  bailey->add_option("--nmax", nmax)->check(CLI::NonNegativeNumber);
  bailey->add_option("--order", bailey_order)->check(CLI::NonNegativeNumber);
  bailey->add_flag("--json", bailey_json);

  // report
  auto* report = app.add_subcommand("report", "Report-only statistics");
  bool lacunarity = false;
  std::string report_id;
  qrds::Exponent report_order = 1000;
  report->add_flag("--lacunarity", lacunarity)->required();
  report->add_option("--id", report_id)->required();
  report->add_option("--order", report_order)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*series) {
      const auto f = pick_format(series_json, series_csv);
      print_series(qrds::eval_named(qrds::parse_series_id(series_id), series_order), f);
      return 0;
    }
    if (*hecke) {
      const auto& set = qrds::hecke_catalog(qrds::parse_series_id(hecke_id));
      if (hecke_blocks) {
        std::cout << qrds::blocks_to_json(set).dump(2) << '\n';
      } else {
        print_series(qrds::eval_blocks(set, hecke_order), pick_format(hecke_json, hecke_csv));
      }
      return 0;
    }
    if (*ideals) {
      const qrds::IdealQuery q{qrds::field_spec(d), residue, modulus,
                               neg_norm ? qrds::Restriction::negative_norm_generator
                                        : qrds::Restriction::all_ideals};
      print_series(qrds::ideal_series(q, ideals_order, parse_rational(weight_text)),
                   pick_format(ideals_json, ideals_csv));
      return 0;
    }
    if (*verify) {
      qrds::VerifyOptions opts;
      opts.base_order = base_order;
      std::vector<qrds::VerificationReport> reports;
      if (theorem) {
        reports.push_back(
            qrds::verify_theorem(*theorem, verify_order.value_or(qrds::kDefaultTheoremOrder), opts));
      } else if (corollary) {
        reports.push_back(qrds::verify_corollary(
            *corollary, verify_order.value_or(qrds::kDefaultCorollaryOrder)));
      } else if (sigma) {
        reports.push_back(qrds::verify_sigma(verify_order.value_or(qrds::kDefaultSigmaOrder)));
      } else if (all) {
        reports = qrds::verify_all(verify_order, opts);
      } else {
        std::cerr << "verify: one of --theorem, --corollary, --sigma, --all is required\n";
        return kExitUsage;
      }
      return emit_reports(reports, verify_json);
    }
    if (*bailey) {
      const qrds::PairId id = qrds::parse_pair_id(pair_name);
      if (check) return emit_reports({qrds::verify_bailey(id, nmax, bailey_order)}, bailey_json);
      const qrds::BaileyPair pair = qrds::pair_catalog(id);
      for (std::int64_t n = 0; n <= nmax; ++n) {
        std::cout << "alpha_" << n << " = " << qrds::series_to_text(pair.alpha(n, bailey_order))
                  << "\nbeta_" << n << " = " << qrds::series_to_text(pair.beta(n, bailey_order))
                  << '\n';
      }
      return 0;
    }
    if (*report) {
      const auto r = qrds::lacunarity_report(qrds::parse_series_id(report_id), report_order);
      std::cout << qrds::lacunarity_to_json(r).dump(2) << '\n';
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
