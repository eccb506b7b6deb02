#pragma once

#include <string>
#include <string_view>

#include "ngon/polygon.hpp"

namespace ngon {

// Wire schema for states and effects:
//   {"n": <int> | "inf", "coords": [x, y, z]}
// Numbers round-trip exactly (shortest representation), well inside the
// 1e-12 requirement.

std::string to_json(const StateVector& s);
std::string to_json(const EffectVector& e);

/// Parses the schema above. Throws std::invalid_argument on malformed
/// input or when the coordinates violate the membership invariant.
StateVector state_from_json(std::string_view text,
                            double tolerance = tol::kMembership);
EffectVector effect_from_json(std::string_view text,
                              double tolerance = tol::kMembership);

}  // namespace ngon
