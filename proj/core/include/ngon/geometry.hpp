#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace ngon {

// Every tolerance that decides a verdict lives here and is quoted in the
// error message of whatever check it guards.
namespace tol {
inline constexpr double kWeightSum = 1e-12;    // probability weights sum to one
inline constexpr double kMembership = 1e-9;    // state/effect/segment membership
inline constexpr double kIdentity = 1e-10;     // cross-checks of exact identities
inline constexpr double kClosedForm = 1e-12;   // agreement of two algebraic forms
inline constexpr double kLpFeasible = 1e-9;    // phase-1 residual at or below: feasible
inline constexpr double kLpInfeasible = 1e-7;  // phase-1 residual at or above: infeasible
inline constexpr double kGap = 1e-8;           // entropy gap that counts as inconsistent
}  // namespace tol

// Raised when a geometric construction cannot be carried out (parallel
// chords, intersection outside a segment, ...).
class GeometryError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& v);
bool operator==(const Vec3& a, const Vec3& b);

bool is_finite(const Vec3& v);

/// Euclidean dot product; the pairing between effect and state coordinates.
double inner(const Vec3& a, const Vec3& b);

/// Euclidean length of the (x, y) part; states and effects live in z-slices.
double planar_norm(const Vec3& v);

double distance(const Vec3& a, const Vec3& b);

/// Nonnegative weights summing to one (within tol::kWeightSum).
/// Construction validates; instances are immutable afterwards.
class ProbWeights {
 public:
  explicit ProbWeights(std::vector<double> w);

  const std::vector<double>& values() const { return w_; }
  std::size_t size() const { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }

 private:
  std::vector<double> w_;
};

/// Sub-lengths of a chord cut by an interior point. `near` is measured from
/// the chord's first endpoint. ratio() is what enters entropy formulas.
struct ChordSplit {
  double near = 0.0;
  double far = 0.0;
  double ratio() const { return near / (near + far); }
};

struct ChordIntersection {
  Vec3 point;
  ChordSplit split_a;  // near measured from a1
  ChordSplit split_b;  // near measured from b1
};

/// Intersects segments [a1,a2] and [b1,b2] in the z=1 plane. All endpoints
/// must have z = 1 within tol::kMembership. Throws GeometryError when the
/// segments are parallel/collinear or the crossing lies outside either
/// segment (beyond tol::kMembership in Euclidean units).
ChordIntersection chord_intersection(const Vec3& a1, const Vec3& a2,
                                     const Vec3& b1, const Vec3& b2);

/// Barycentric weights (p, q, 1-p-q) of `target` with respect to the
/// triangle (a, b, c), all in the z=1 plane. Throws for a degenerate
/// triangle or a target outside the hull (weight below -tol::kMembership).
ProbWeights barycentric_triangle(const Vec3& target, const Vec3& a,
                                 const Vec3& b, const Vec3& c);

/// Sum of weights[i] * points[i]. Lengths must match.
Vec3 convex_combine(std::span<const Vec3> points, const ProbWeights& weights);

/// -sum w_i ln w_i in nats, with 0 ln 0 = 0. Always >= 0.
double shannon_entropy(const ProbWeights& weights);

/// Shannon entropy of {p, 1-p} in nats. p is clamped to [0, 1] to absorb
/// roundoff at the endpoints.
double binary_entropy(double p);

}  // namespace ngon
