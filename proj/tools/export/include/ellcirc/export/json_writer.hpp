#pragma once

#include <string>

#include "json.hpp"

namespace ellcirc::exporting {

using Json = nlohmann::ordered_json;

/// Serializes `doc` with every floating-point value printed as %.17g.
/// `indent` < 0 gives the compact single-line form. Throws ConsistencyError
/// on NaN or infinite numbers.
std::string dump_json(const Json& doc, int indent = 2);

}  // namespace ellcirc::exporting
