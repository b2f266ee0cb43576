#pragma once

#include <string>

#include <json.hpp>

#include "toric/bundle.hpp"
#include "toric/numeric.hpp"
#include "toric/polytope.hpp"

namespace toric::io {

// Polytope document: {"dim": n, "vertices": [[...], ...]}. Coordinates are JSON integers or
// decimal strings for values beyond 64 bits.
// Bundle document: {"base_dim": n, "summands": [polytope document, ...]}.
// Format errors throw InputFormat naming the offending field.

Polytope polytope_from_json(const nlohmann::json& doc, const std::string& where = "");
Polytope parse_polytope(const std::string& text);
Polytope load_polytope(const std::string& path);

BundleData bundle_from_json(const nlohmann::json& doc);
BundleData parse_bundle(const std::string& text);
BundleData load_bundle(const std::string& path);

nlohmann::json polytope_to_json(const Polytope& p);

/// A JSON integer when it fits in 64 bits, otherwise a decimal string.
nlohmann::json integer(const BigInt& z);
/// "num/den" or "num".
nlohmann::json fraction(const Rational& q);

}  // namespace toric::io
