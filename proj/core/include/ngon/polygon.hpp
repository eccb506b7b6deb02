#pragma once

#include <string>
#include <vector>

#include "ngon/geometry.hpp"

namespace ngon {

/// Which theory: the regular n-gon for finite n >= 3, or the disk limit.
class PolygonSpec {
 public:
  static PolygonSpec finite(int n);
  static PolygonSpec infinite();

  bool is_infinite() const { return n_ == kDisk; }
  /// Number of vertices; throws for the disk.
  int sides() const;
  /// "3", "17", or "inf" — used in messages and CLI output.
  std::string label() const;

  friend bool operator==(const PolygonSpec&, const PolygonSpec&) = default;

 private:
  explicit PolygonSpec(int n) : n_(n) {}
  static constexpr int kDisk = 0;
  int n_;
};

/// Circumradius of the state polygon: sqrt(1/cos(pi/n)); 1 for the disk.
double radius(const PolygonSpec& spec);

/// i reduced into [0, n) (floor modulus, so negative indices wrap).
int reduce_index(const PolygonSpec& spec, int i);

/// Normalized state of a theory: z = 1 and (x, y) inside the state polygon
/// (or disk), boundary inclusive within `tolerance`. Construction validates.
class StateVector {
 public:
  StateVector(const PolygonSpec& theory, const Vec3& coords,
              double tolerance = tol::kMembership);

  const Vec3& coords() const { return coords_; }
  const PolygonSpec& theory() const { return theory_; }

 private:
  PolygonSpec theory_;
  Vec3 coords_;
};

/// An affine functional with 0 <= e(omega) <= 1 on every state of the
/// theory (no-restriction effect space). Construction validates.
class EffectVector {
 public:
  EffectVector(const PolygonSpec& theory, const Vec3& coords,
               double tolerance = tol::kMembership);

  const Vec3& coords() const { return coords_; }
  const PolygonSpec& theory() const { return theory_; }

 private:
  PolygonSpec theory_;
  Vec3 coords_;
};

/// A finite list of effects summing to the unit effect (componentwise
/// within tol::kIdentity), all in one theory.
class Measurement {
 public:
  explicit Measurement(std::vector<EffectVector> effects);

  const std::vector<EffectVector>& effects() const { return effects_; }
  std::size_t size() const { return effects_.size(); }

 private:
  std::vector<EffectVector> effects_;
};

/// Vertex state omega_i of the finite n-gon, index reduced mod n.
StateVector pure_state(const PolygonSpec& spec, int i);
/// Boundary state omega_theta of the disk; theta reduced into [0, 2pi).
StateVector pure_state_angle(const PolygonSpec& spec, double theta);

/// Extreme effect e_i of the finite n-gon (even or odd family).
EffectVector pure_effect(const PolygonSpec& spec, int i);
/// Extreme effect e_theta of the disk.
EffectVector pure_effect_angle(const PolygonSpec& spec, double theta);

/// u - e; extreme whenever e is.
EffectVector complement(const EffectVector& e);

/// All extreme effects of a finite theory, in the order
/// {0, u, e_0..e_{n-1}} for even n and {0, u, e_0..e_{n-1}, ebar_0..ebar_{n-1}}
/// for odd n. The disk's effect family is parametric; use pure_effect_angle
/// and contains_effect instead (this throws for the disk).
std::vector<EffectVector> pure_effects(const PolygonSpec& spec);

EffectVector unit_effect(const PolygonSpec& spec);
EffectVector zero_effect(const PolygonSpec& spec);

/// Probability of the effect firing on the state. Theories must match.
double evaluate(const EffectVector& e, const StateVector& omega);

/// True iff z = 1 and (x, y) lies in the state polygon/disk, boundary
/// inclusive within `tolerance` (Euclidean units).
bool contains_state(const PolygonSpec& spec, const Vec3& v,
                    double tolerance = tol::kMembership);

/// True iff v evaluates into [0, 1] on every pure state, within `tolerance`.
bool contains_effect(const PolygonSpec& spec, const Vec3& v,
                     double tolerance = tol::kMembership);

}  // namespace ngon
