#include "qrds/serialize.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace qrds {

nlohmann::json series_to_json(const LaurentSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [e, c] : s.terms()) {
    coeffs.push_back({{"exp", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  nlohmann::json j;
  j["offset"] = s.offset();
  j["order"] = s.is_exact() ? nlohmann::json(nullptr) : nlohmann::json(s.order());
  j["coefficients"] = std::move(coeffs);
  return j;
}

LaurentSeries series_from_json(const nlohmann::json& j) {
  const Exponent order = j.at("order").is_null() ? kExactOrder : j.at("order").get<Exponent>();
  std::map<Exponent, Rational> entries;
  for (const auto& c : j.at("coefficients")) {
    Rational r(Integer(c.at("num").get<std::string>()), Integer(c.at("den").get<std::string>()));
    r.canonicalize();
    entries[c.at("exp").get<Exponent>()] += r;
  }
  LaurentSeries s = LaurentSeries::zero(order);
  for (const auto& [e, c] : entries) s.add_monomial(c, e);
  return s;
}

std::string series_to_csv(const LaurentSeries& s) {
  std::ostringstream out;
  out << "exp,num,den\n";
  for (const auto& [e, c] : s.terms()) out << e << ',' << c.get_num() << ',' << c.get_den() << '\n';
  return out.str();
}

std::string series_to_text(const LaurentSeries& s) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (!unit || e == 0) out << mag;
    if (e != 0) {
      if (!unit) out << '*';
      out << 'q';
      if (e != 1) out << '^' << e;
    }
  }
  if (first) out << '0';
  if (!s.is_exact()) out << " + O(q^" << s.order() + 1 << ')';
  return out.str();
}

}  // namespace qrds
