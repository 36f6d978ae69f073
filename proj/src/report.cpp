#include "qrds/report.hpp"

#include <sstream>

namespace qrds {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::error:
      return "error";
  }
  return "error";
}

void VerificationReport::add(LegResult leg) {
  if (!leg.pass) {
    if (status == Status::pass) status = Status::fail;
    if (!first_mismatch && leg.mismatch) first_mismatch = leg.mismatch;
  }
  legs.push_back(std::move(leg));
}

void VerificationReport::fail_with_error(const std::string& what) {
  status = Status::error;
  error = what;
}

LegResult compare_leg(std::string name, const LaurentSeries& lhs, const LaurentSeries& rhs,
                      Exponent upto) {
  LegResult leg;
  leg.name = std::move(name);
  if (lhs.order() < upto || rhs.order() < upto) {
    leg.note = "insufficient order: lhs " + std::to_string(lhs.order()) + ", rhs " +
               std::to_string(rhs.order()) + ", need " + std::to_string(upto);
    return leg;
  }
  if (const auto d = first_difference(lhs, rhs, upto)) {
    leg.mismatch = Mismatch{*d, lhs.coeff(*d).get_str(), rhs.coeff(*d).get_str()};
    return leg;
  }
  leg.pass = true;
  return leg;
}

LegResult check_leg(std::string name, bool ok, std::string note) {
  LegResult leg;
  leg.name = std::move(name);
  leg.pass = ok;
  leg.note = std::move(note);
  return leg;
}

nlohmann::json report_to_json(const VerificationReport& r) {
  auto mismatch_json = [](const std::optional<Mismatch>& m) {
    if (!m) return nlohmann::json(nullptr);
    return nlohmann::json{{"exp", m->exp}, {"lhs", m->lhs}, {"rhs", m->rhs}};
  };
  nlohmann::json legs = nlohmann::json::array();
  for (const auto& l : r.legs) {
    nlohmann::json j = {{"name", l.name}, {"pass", l.pass}, {"mismatch", mismatch_json(l.mismatch)}};
    if (!l.note.empty()) j["note"] = l.note;
    legs.push_back(std::move(j));
  }
  nlohmann::json out = {{"id", r.id},
                        {"order", r.order},
                        {"status", to_string(r.status)},
                        {"first_mismatch", mismatch_json(r.first_mismatch)},
                        {"legs", legs},
                        {"elapsed_ms", r.elapsed_ms}};
  if (!r.error.empty()) out["error"] = r.error;
  return out;
}

std::string report_line(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.status == Status::pass ? "PASS" : r.status == Status::fail ? "FAIL" : "ERROR") << ' '
     << r.id << " order=" << r.order << " (" << r.elapsed_ms << " ms)";
  if (r.first_mismatch) {
    os << " first mismatch at q^" << r.first_mismatch->exp << ": " << r.first_mismatch->lhs
       << " vs " << r.first_mismatch->rhs;
  }
  for (const auto& l : r.legs) {
    if (!l.pass && !l.note.empty()) os << " [" << l.name << ": " << l.note << ']';
  }
  if (!r.error.empty()) os << " error: " << r.error;
  return os.str();
}

}  // namespace qrds
