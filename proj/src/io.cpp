#include "toric/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "toric/error.hpp"

namespace toric::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ToricError(ErrorKind::InputFormat, (where.empty() ? "" : where + ": ") + what);
}

BigInt coordinate(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return BigInt(v.get<std::uint64_t>());
    return BigInt(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    const bool digits = !s.empty() && s.find_first_not_of("-0123456789") == std::string::npos &&
                        s.find('-', 1) == std::string::npos && s != "-";
    if (!digits) fail(where, "expected an integer, got \"" + s + "\"");
    return BigInt(s);
  }
  fail(where, "expected an integer, got " + std::string(v.type_name()));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ToricError(ErrorKind::InputFormat, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json parse_text(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ToricError(ErrorKind::InputFormat, e.what());
  }
}

std::string join(const std::string& where, const std::string& field) {
  return where.empty() ? field : where + "." + field;
}

}  // namespace

Polytope polytope_from_json(const nlohmann::json& doc, const std::string& where) {
  if (!doc.is_object()) fail(where, "expected an object with \"dim\" and \"vertices\"");
  if (!doc.contains("dim")) fail(join(where, "dim"), "missing");
  if (!doc.contains("vertices")) fail(join(where, "vertices"), "missing");
  const auto& dim_field = doc.at("dim");
  if (!dim_field.is_number_integer() || dim_field.get<std::int64_t>() < 0) {
    fail(join(where, "dim"), "expected a nonnegative integer");
  }
  const auto dim = static_cast<std::size_t>(dim_field.get<std::int64_t>());
  const auto& verts = doc.at("vertices");
  if (!verts.is_array()) fail(join(where, "vertices"), "expected an array");
  if (verts.size() < dim + 1) {
    fail(join(where, "vertices"), "need at least " + std::to_string(dim + 1) + " vertices, got " +
                                      std::to_string(verts.size()));
  }
  std::vector<LatticeVector> points;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::string at = join(where, "vertices") + "[" + std::to_string(i) + "]";
    const auto& v = verts[i];
    if (!v.is_array()) fail(at, "expected an array of integers");
    if (v.size() != dim) {
      fail(at, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(v.size()));
    }
    LatticeVector p;
    for (std::size_t c = 0; c < v.size(); ++c) {
      p.push_back(coordinate(v[c], at + "[" + std::to_string(c) + "]"));
    }
    points.push_back(std::move(p));
  }
  return Polytope::from_vertices(dim, points);
}

Polytope parse_polytope(const std::string& text) { return polytope_from_json(parse_text(text)); }

Polytope load_polytope(const std::string& path) {
  try {
    return parse_polytope(read_file(path));
  } catch (const ToricError& e) {
    if (e.kind() != ErrorKind::InputFormat) throw;
    throw ToricError(ErrorKind::InputFormat, path + ": " + e.what());
  }
}

BundleData bundle_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) fail("", "expected an object with \"base_dim\" and \"summands\"");
  if (!doc.contains("base_dim")) fail("base_dim", "missing");
  if (!doc.contains("summands")) fail("summands", "missing");
  const auto& base = doc.at("base_dim");
  if (!base.is_number_integer() || base.get<std::int64_t>() < 0) {
    fail("base_dim", "expected a nonnegative integer");
  }
  const auto& arr = doc.at("summands");
  if (!arr.is_array()) fail("summands", "expected an array");
  std::vector<Polytope> summands;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = "summands[" + std::to_string(i) + "]";
    Polytope p = polytope_from_json(arr[i], at);
    if (p.dim() != static_cast<std::size_t>(base.get<std::int64_t>())) {
      fail(at + ".dim", "does not match base_dim");
    }
    summands.push_back(std::move(p));
  }
  return BundleData::make(std::move(summands));
}

BundleData parse_bundle(const std::string& text) { return bundle_from_json(parse_text(text)); }

BundleData load_bundle(const std::string& path) {
  try {
    return parse_bundle(read_file(path));
  } catch (const ToricError& e) {
    if (e.kind() != ErrorKind::InputFormat) throw;
    throw ToricError(ErrorKind::InputFormat, path + ": " + e.what());
  }
}

nlohmann::json integer(const BigInt& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(z);
  }
  return z.str();
}

nlohmann::json fraction(const Rational& q) { return to_string(q); }

nlohmann::json polytope_to_json(const Polytope& p) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : p.vertices()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : v) row.push_back(integer(x));
    verts.push_back(std::move(row));
  }
  return {{"dim", p.dim()}, {"vertices", std::move(verts)}};
}

}  // namespace toric::io
