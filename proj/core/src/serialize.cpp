#include "ngon/serialize.hpp"

#include <json.hpp>

namespace ngon {

namespace {

nlohmann::json vec_to_json(const PolygonSpec& theory, const Vec3& v) {
  nlohmann::json j;
  if (theory.is_infinite()) {
    j["n"] = "inf";
  } else {
    j["n"] = theory.sides();
  }
  j["coords"] = {v.x, v.y, v.z};
  return j;
}

struct ParsedVec {
  PolygonSpec theory = PolygonSpec::infinite();
  Vec3 coords;
};

ParsedVec parse_vec(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("coords")) {
    throw std::invalid_argument(
        R"(expected an object {"n": <int>|"inf", "coords": [x, y, z]})");
  }

  ParsedVec out;
  const auto& n = j.at("n");
  if (n.is_string()) {
    if (n.get<std::string>() != "inf") {
      throw std::invalid_argument("field \"n\": expected an integer >= 3 or \"inf\"");
    }
    out.theory = PolygonSpec::infinite();
  } else if (n.is_number_integer()) {
    out.theory = PolygonSpec::finite(n.get<int>());
  } else {
    throw std::invalid_argument("field \"n\": expected an integer >= 3 or \"inf\"");
  }

  const auto& c = j.at("coords");
  if (!c.is_array() || c.size() != 3 || !c[0].is_number() || !c[1].is_number() ||
      !c[2].is_number()) {
    throw std::invalid_argument("field \"coords\": expected [x, y, z]");
  }
  out.coords = {c[0].get<double>(), c[1].get<double>(), c[2].get<double>()};
  return out;
}

}  // namespace

std::string to_json(const StateVector& s) {
  return vec_to_json(s.theory(), s.coords()).dump();
}

std::string to_json(const EffectVector& e) {
  return vec_to_json(e.theory(), e.coords()).dump();
}

StateVector state_from_json(std::string_view text, double tolerance) {
  ParsedVec p = parse_vec(text);
  return StateVector(p.theory, p.coords, tolerance);
}

EffectVector effect_from_json(std::string_view text, double tolerance) {
  ParsedVec p = parse_vec(text);
  return EffectVector(p.theory, p.coords, tolerance);
}

}  // namespace ngon
