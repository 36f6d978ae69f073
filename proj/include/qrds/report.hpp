#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qrds/series.hpp"

namespace qrds {

enum class Status { pass, fail, error };
std::string to_string(Status s);

struct Mismatch {
  Exponent exp = 0;
  std::string lhs;
  std::string rhs;
};

/// One pairwise comparison (or one-sided check) inside a verification.
struct LegResult {
  std::string name;
  bool pass = false;
  std::optional<Mismatch> mismatch;
  std::string note;
};

struct VerificationReport {
  std::string id;
  Exponent order = 0;
  Status status = Status::pass;
  std::optional<Mismatch> first_mismatch;
  std::vector<LegResult> legs;
  std::int64_t elapsed_ms = 0;
  std::string error;

  bool passed() const { return status == Status::pass; }
  /// Appends a leg; the first failing leg supplies first_mismatch.
  void add(LegResult leg);
  void fail_with_error(const std::string& what);
};

/// Exact comparison of every exponent <= upto. Both sides must know every
/// such coefficient, otherwise the leg fails with a note.
LegResult compare_leg(std::string name, const LaurentSeries& lhs, const LaurentSeries& rhs,
                      Exponent upto);

LegResult check_leg(std::string name, bool ok, std::string note = {});

nlohmann::json report_to_json(const VerificationReport& r);

/// One human-readable line: "PASS theorem-2 order=1500 (12 ms)" plus the mismatch.
std::string report_line(const VerificationReport& r);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace qrds
