#include "ngon/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace ngon {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), pattern, a, b, c);
  return buf;
}

double xlogx(double t) { return t <= 0.0 ? 0.0 : t * std::log(t); }

void require_on_plane(const Vec3& v, const char* what) {
  if (!is_finite(v)) {
    throw std::invalid_argument(std::string(what) + ": non-finite coordinates");
  }
  if (std::abs(v.z - 1.0) > tol::kMembership) {
    throw std::invalid_argument(std::string(what) +
                                fmt(": z = %.17g, expected 1 within 1e-9", v.z));
  }
}

}  // namespace

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
bool operator==(const Vec3& a, const Vec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }

bool is_finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

double inner(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

double planar_norm(const Vec3& v) { return std::hypot(v.x, v.y); }

double distance(const Vec3& a, const Vec3& b) {
  return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

ProbWeights::ProbWeights(std::vector<double> w) : w_(std::move(w)) {
  if (w_.empty()) throw std::invalid_argument("ProbWeights: empty weight list");
  double sum = 0.0;
  for (double wi : w_) {
    if (!std::isfinite(wi)) throw std::invalid_argument("ProbWeights: non-finite weight");
    if (wi < 0.0) {
      throw std::invalid_argument(fmt("ProbWeights: negative weight %.17g", wi));
    }
    sum += wi;
  }
  if (std::abs(sum - 1.0) > tol::kWeightSum) {
    throw std::invalid_argument(
        fmt("ProbWeights: weights sum to %.17g, expected 1 within 1e-12", sum));
  }
}

ChordIntersection chord_intersection(const Vec3& a1, const Vec3& a2,
                                     const Vec3& b1, const Vec3& b2) {
  require_on_plane(a1, "chord_intersection: a1");
  require_on_plane(a2, "chord_intersection: a2");
  require_on_plane(b1, "chord_intersection: b1");
  require_on_plane(b2, "chord_intersection: b2");

  const double dax = a2.x - a1.x, day = a2.y - a1.y;
  const double dbx = b2.x - b1.x, dby = b2.y - b1.y;
  const double len_a = std::hypot(dax, day);
  const double len_b = std::hypot(dbx, dby);
  if (len_a == 0.0 || len_b == 0.0) {
    throw std::invalid_argument("chord_intersection: zero-length chord");
  }

  const double den = dax * dby - day * dbx;
  if (std::abs(den) <= 1e-12 * len_a * len_b) {
    throw GeometryError(
        "chord_intersection: chords are parallel or collinear "
        "(|cross| <= 1e-12 relative to chord lengths)");
  }

  const double ex = b1.x - a1.x, ey = b1.y - a1.y;
  double t = (ex * dby - ey * dbx) / den;
  double u = (ex * day - ey * dax) / den;

  // Euclidean membership tolerance converted to parameter units.
  const double t_tol = tol::kMembership / len_a;
  const double u_tol = tol::kMembership / len_b;
  if (t < -t_tol || t > 1.0 + t_tol || u < -u_tol || u > 1.0 + u_tol) {
    throw GeometryError(fmt(
        "chord_intersection: crossing lies outside a segment "
        "(parameters %.17g, %.17g; membership tolerance 1e-9)", t, u));
  }
  t = std::clamp(t, 0.0, 1.0);
  u = std::clamp(u, 0.0, 1.0);

  Vec3 point{a1.x + t * dax, a1.y + t * day, 1.0};
  return {point,
          ChordSplit{t * len_a, (1.0 - t) * len_a},
          ChordSplit{u * len_b, (1.0 - u) * len_b}};
}

ProbWeights barycentric_triangle(const Vec3& target, const Vec3& a,
                                 const Vec3& b, const Vec3& c) {
  require_on_plane(target, "barycentric_triangle: target");
  require_on_plane(a, "barycentric_triangle: a");
  require_on_plane(b, "barycentric_triangle: b");
  require_on_plane(c, "barycentric_triangle: c");

  const double m00 = a.x - c.x, m01 = b.x - c.x;
  const double m10 = a.y - c.y, m11 = b.y - c.y;
  const double det = m00 * m11 - m01 * m10;
  const double scale = std::hypot(m00, m10) * std::hypot(m01, m11);
  if (scale == 0.0 || std::abs(det) <= 1e-12 * scale) {
    throw std::invalid_argument("barycentric_triangle: degenerate triangle");
  }

  const double rx = target.x - c.x, ry = target.y - c.y;
  double p = (rx * m11 - ry * m01) / det;
  double q = (m00 * ry - m10 * rx) / det;
  double r = 1.0 - p - q;

  const double lo = -tol::kMembership;
  if (p < lo || q < lo || r < lo) {
    throw std::invalid_argument(fmt(
        "barycentric_triangle: target outside hull "
        "(weights %.17g, %.17g, %.17g; tolerance 1e-9)", p, q, r));
  }
  p = std::max(p, 0.0);
  q = std::max(q, 0.0);
  r = std::max(r, 0.0);
  const double sum = p + q + r;
  return ProbWeights({p / sum, q / sum, r / sum});
}

Vec3 convex_combine(std::span<const Vec3> points, const ProbWeights& weights) {
  if (points.size() != weights.size()) {
    throw std::invalid_argument("convex_combine: point/weight length mismatch");
  }
  Vec3 acc{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < points.size(); ++i) {
    acc = acc + weights[i] * points[i];
  }
  return acc;
}

double shannon_entropy(const ProbWeights& weights) {
  double h = 0.0;
  for (double w : weights.values()) h -= xlogx(w);
  return std::max(h, 0.0);
}

double binary_entropy(double p) {
  p = std::clamp(p, 0.0, 1.0);
  return std::max(-xlogx(p) - xlogx(1.0 - p), 0.0);
}

}  // namespace ngon
