#pragma once

#include <json.hpp>
#include <string>

#include "numrat/model.hpp"

namespace numrat {

/// Parses the JSON config format. Throws InputError with the offending
/// location on malformed JSON, a non-square rank or a schema violation.
OrderConfig parse_config(const std::string& text);
OrderConfig load_config(const std::string& path);

/// Canonical JSON form; parse_config(to_json(c).dump()) == c.
nlohmann::ordered_json to_json(const OrderConfig& config);

/// "E1:2,E2:1/2"; the empty string is the zero divisor.
Divisor parse_divisor(const std::string& text);

nlohmann::ordered_json to_json(const Divisor& d);

}  // namespace numrat
