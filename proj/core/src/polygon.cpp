#include "ngon/polygon.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace ngon {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string describe(const Vec3& v) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "(%.17g, %.17g, %.17g)", v.x, v.y, v.z);
  return buf;
}

Vec3 vertex_coords(int n, int i) {
  const double r = std::sqrt(1.0 / std::cos(kPi / n));
  const double a = kTwoPi * i / n;
  return {r * std::cos(a), r * std::sin(a), 1.0};
}

}  // namespace

PolygonSpec PolygonSpec::finite(int n) {
  if (n < 3) {
    throw std::invalid_argument("PolygonSpec: n must be >= 3 (got " +
                                std::to_string(n) + ")");
  }
  return PolygonSpec(n);
}

PolygonSpec PolygonSpec::infinite() { return PolygonSpec(kDisk); }

int PolygonSpec::sides() const {
  if (is_infinite()) {
    throw std::logic_error("PolygonSpec: the disk has no vertex count");
  }
  return n_;
}

std::string PolygonSpec::label() const {
  return is_infinite() ? "inf" : std::to_string(n_);
}

double radius(const PolygonSpec& spec) {
  if (spec.is_infinite()) return 1.0;
  return std::sqrt(1.0 / std::cos(kPi / spec.sides()));
}

int reduce_index(const PolygonSpec& spec, int i) {
  const int n = spec.sides();
  const int r = i % n;
  return r < 0 ? r + n : r;
}

StateVector::StateVector(const PolygonSpec& theory, const Vec3& coords,
                         double tolerance)
    : theory_(theory), coords_(coords) {
  if (!contains_state(theory, coords, tolerance)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", tolerance);
    throw std::invalid_argument("state " + describe(coords) +
                                " is outside Omega_" + theory.label() +
                                " (membership tolerance " + buf + ")");
  }
}

EffectVector::EffectVector(const PolygonSpec& theory, const Vec3& coords,
                           double tolerance)
    : theory_(theory), coords_(coords) {
  if (!contains_effect(theory, coords, tolerance)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", tolerance);
    throw std::invalid_argument("effect " + describe(coords) +
                                " is outside E(Omega_" + theory.label() +
                                ") (tolerance " + buf + ")");
  }
}

Measurement::Measurement(std::vector<EffectVector> effects)
    : effects_(std::move(effects)) {
  if (effects_.empty()) throw std::invalid_argument("Measurement: no effects");
  const PolygonSpec& theory = effects_.front().theory();
  Vec3 sum{0.0, 0.0, 0.0};
  for (const EffectVector& e : effects_) {
    if (!(e.theory() == theory)) {
      throw std::invalid_argument("Measurement: effects from different theories");
    }
    sum = sum + e.coords();
  }
  const Vec3 u{0.0, 0.0, 1.0};
  const Vec3 d = sum - u;
  if (std::abs(d.x) > tol::kIdentity || std::abs(d.y) > tol::kIdentity ||
      std::abs(d.z) > tol::kIdentity) {
    throw std::invalid_argument("Measurement: effects sum to " + describe(sum) +
                                ", expected the unit effect within 1e-10");
  }
}

StateVector pure_state(const PolygonSpec& spec, int i) {
  if (spec.is_infinite()) {
    throw std::invalid_argument(
        "pure_state: the disk takes an angle; use pure_state_angle");
  }
  return StateVector(spec, vertex_coords(spec.sides(), reduce_index(spec, i)));
}

StateVector pure_state_angle(const PolygonSpec& spec, double theta) {
  if (!spec.is_infinite()) {
    throw std::invalid_argument(
        "pure_state_angle: finite theories take an index; use pure_state");
  }
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0.0) theta += kTwoPi;
  return StateVector(spec, {std::cos(theta), std::sin(theta), 1.0});
}

EffectVector pure_effect(const PolygonSpec& spec, int i) {
  if (spec.is_infinite()) {
    throw std::invalid_argument(
        "pure_effect: the disk takes an angle; use pure_effect_angle");
  }
  const int n = spec.sides();
  const int k = reduce_index(spec, i);
  const double r = radius(spec);
  if (n % 2 == 0) {
    const double a = (2.0 * k - 1.0) * kPi / n;
    return EffectVector(spec, {0.5 * r * std::cos(a), 0.5 * r * std::sin(a), 0.5});
  }
  const double a = kTwoPi * k / n;
  const double c = 1.0 / (1.0 + r * r);
  return EffectVector(spec, {c * r * std::cos(a), c * r * std::sin(a), c});
}

EffectVector pure_effect_angle(const PolygonSpec& spec, double theta) {
  if (!spec.is_infinite()) {
    throw std::invalid_argument(
        "pure_effect_angle: finite theories take an index; use pure_effect");
  }
  return EffectVector(spec, {0.5 * std::cos(theta), 0.5 * std::sin(theta), 0.5});
}

EffectVector complement(const EffectVector& e) {
  return EffectVector(e.theory(), Vec3{0.0, 0.0, 1.0} - e.coords());
}

std::vector<EffectVector> pure_effects(const PolygonSpec& spec) {
  if (spec.is_infinite()) {
    throw std::invalid_argument(
        "pure_effects: the disk's extreme effects form a continuum; use "
        "pure_effect_angle or contains_effect");
  }
  const int n = spec.sides();
  std::vector<EffectVector> out;
  out.reserve(n % 2 == 0 ? n + 2 : 2 * n + 2);
  out.push_back(zero_effect(spec));
  out.push_back(unit_effect(spec));
  for (int i = 0; i < n; ++i) out.push_back(pure_effect(spec, i));
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) out.push_back(complement(pure_effect(spec, i)));
  }
  return out;
}

EffectVector unit_effect(const PolygonSpec& spec) {
  return EffectVector(spec, {0.0, 0.0, 1.0});
}

EffectVector zero_effect(const PolygonSpec& spec) {
  return EffectVector(spec, {0.0, 0.0, 0.0});
}

double evaluate(const EffectVector& e, const StateVector& omega) {
  if (!(e.theory() == omega.theory())) {
    throw std::invalid_argument("evaluate: effect from Omega_" +
                                e.theory().label() + " applied to state of Omega_" +
                                omega.theory().label());
  }
  return inner(e.coords(), omega.coords());
}

bool contains_state(const PolygonSpec& spec, const Vec3& v, double tolerance) {
  if (!is_finite(v)) return false;
  if (std::abs(v.z - 1.0) > tolerance) return false;
  if (spec.is_infinite()) return planar_norm(v) <= 1.0 + tolerance;

  const int n = spec.sides();
  const double apothem = std::sqrt(std::cos(kPi / n));
  for (int k = 0; k < n; ++k) {
    // Outward unit normal of the edge [omega_k, omega_{k+1}].
    const double a = (2.0 * k + 1.0) * kPi / n;
    const double d = v.x * std::cos(a) + v.y * std::sin(a);
    if (d > apothem + tolerance) return false;
  }
  return true;
}

bool contains_effect(const PolygonSpec& spec, const Vec3& v, double tolerance) {
  if (!is_finite(v)) return false;
  if (spec.is_infinite()) {
    const double rho = planar_norm(v);
    return v.z - rho >= -tolerance && v.z + rho <= 1.0 + tolerance;
  }
  const int n = spec.sides();
  for (int i = 0; i < n; ++i) {
    const double p = inner(v, vertex_coords(n, i));
    if (p < -tolerance || p > 1.0 + tolerance) return false;
  }
  return true;
}

}  // namespace ngon
