#pragma once

#include <json.hpp>

#include "nilpoly/bounded.hpp"
#include "nilpoly/orbit.hpp"
#include "nilpoly/search.hpp"

namespace nilpoly {

using nlohmann::json;

// Integers that fit a signed 64-bit value are emitted as JSON numbers,
// anything larger as a decimal string.
json int_to_json(const Int& n);
json ints_to_json(const std::vector<Int>& v);

json to_json(const OrbitReport& rep);
json to_json(const SequenceFamily& f);
json to_json(const EnumerationResult& r);
json to_json(const BoundedForm& f);
json to_json(const ScanReport& r);

} // namespace nilpoly
