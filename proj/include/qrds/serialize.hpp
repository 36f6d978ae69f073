#pragma once

#include <string>

#include <json.hpp>

#include "qrds/series.hpp"

namespace qrds {

/// {"offset": int, "order": int|null, "coefficients": [{"exp","num","den"}, ...]}
/// Only nonzero coefficients are listed; num/den are decimal strings so that
/// arbitrarily large values survive. An exact polynomial has "order": null.
nlohmann::json series_to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const nlohmann::json& j);

/// CSV with header "exp,num,den", one line per nonzero coefficient.
std::string series_to_csv(const LaurentSeries& s);

/// Human-readable q-expansion, e.g. "1 + q - q^2 + 2*q^3 + O(q^5)".
std::string series_to_text(const LaurentSeries& s);

}  // namespace qrds
