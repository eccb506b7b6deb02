#pragma once

#include <optional>
#include <span>

#include "ngon/polygon.hpp"

namespace ngon {

/// The boundary segment between consecutive pure states omega_{k-1} and
/// omega_k of a finite theory; k is reduced mod n.
struct EdgeSegment {
  PolygonSpec theory;
  int k;
};

/// The weight of omega_{k-1} when v lies on the edge (within `tolerance`,
/// Euclidean); nullopt when it does not.
std::optional<double> edge_parameter(const EdgeSegment& edge, const Vec3& v,
                                     double tolerance = tol::kMembership);

/// A measurement certifying perfect distinguishability: effect
/// measurement.effects()[mapping[j]] fires with probability 1 on state j
/// and 0 on every other listed state.
struct Witness {
  Measurement measurement;
  std::vector<int> mapping;
};

bool witness_valid(const Witness& w, std::span<const StateVector> states,
                   double tolerance = tol::kMembership);

/// Decides a pair by the polygon geometry alone: even n distinguishes
/// opposite boundary edges, odd n a vertex against its opposite edge, the
/// disk only antipodal pure states. Returns the two-outcome witness, or
/// nullopt when the pair is not perfectly distinguishable.
std::optional<Witness> closed_form_pair(const PolygonSpec& spec,
                                        const StateVector& a,
                                        const StateVector& b);

/// Decides any finite set by LP feasibility over the no-restriction effect
/// polytope: find e_1..e_m with 0 <= e_k(omega_i) <= 1 on all pure states,
/// sum e_k = u, e_k(state_j) = delta_kj. Finite n only; 1 <= m <= n.
std::optional<Witness> lp_distinguishable(const PolygonSpec& spec,
                                          std::span<const StateVector> states);

/// Largest m for which some m-subset of pure states is perfectly
/// distinguishable, by exhaustive LP sweep. The disk answers 2 in closed
/// form. Finite n above `sweep_limit` is refused.
int max_distinguishable_size(const PolygonSpec& spec, int sweep_limit = 16);

}  // namespace ngon
