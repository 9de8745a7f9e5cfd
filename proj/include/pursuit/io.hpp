#pragma once

// JSON forms of spaces and points. Real-valued geometry (edge lengths,
// radii, exponents) is written as decimal strings with 17 significant
// digits and read back from either strings or numbers.

#include <string>

#include "json.hpp"
#include "pursuit/spaces.hpp"

namespace pursuit {

using json = nlohmann::json;

// Reads a real from a number or a decimal string; `path` names the field in
// error messages.
double parse_real(const json& j, const std::string& path);
std::string format_real(double v);

const json& require(const json& j, const std::string& key, const std::string& path);

SpacePtr space_from_json(const json& j, const std::string& path = "space");
json space_to_json(const Space& space);

Point point_from_json(const Space& space, const json& j, const std::string& path = "point");
json point_to_json(const Space& space, const Point& p);

}  // namespace pursuit
