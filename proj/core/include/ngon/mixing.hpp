#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ngon/distinguish.hpp"
#include "ngon/polygon.hpp"

namespace ngon {

/// One part of a convex decomposition. Pure components carry zero entropy;
/// non-pure ones contribute `symbol`'s (possibly unknown) entropy.
struct Component {
  double weight = 0.0;
  StateVector state;
  std::string symbol;  // display / entropy-unknown name, e.g. "omega_0", "omega_A"
  bool is_pure = true;
};

/// A convex decomposition of `target` into perfectly distinguishable
/// components, together with the certifying measurement.
struct Decomposition {
  std::vector<Component> components;
  StateVector target;
  Witness witness;
};

/// Validates and assembles a Decomposition: weights form a probability
/// vector, the components reconstruct the target within tol::kMembership,
/// and the witness certifies the component set.
Decomposition make_decomposition(StateVector target,
                                 std::vector<Component> components,
                                 Witness witness);

/// constant + coefficient * S(unknown), in nats.
struct EntropyExpr {
  double constant = 0.0;
  double coefficient = 0.0;
  std::optional<std::string> unknown;

  /// The numeric value; throws when an unknown remains.
  double value() const;
};

/// Mixing entropy of a decomposition: sum_i w_i S(component_i) + H(w).
/// Pure components have S = 0; non-pure ones are looked up in `known`, and
/// at most one distinct symbol may stay unresolved (it becomes `unknown`).
EntropyExpr entropy_of_decomposition(
    const Decomposition& d, const std::map<std::string, double>& known = {});

/// S value forced by expr == target when expr carries an unknown.
double solve_unknown(const EntropyExpr& expr, double target);

/// Entropy of a trit state (n = 3): Shannon entropy of its unique
/// barycentric weights over the three vertices.
double entropy_trit(const StateVector& omega);

/// Entropy of a disk state: H((1 + rho)/2) where rho is the distance from
/// the center; ln 2 at the center.
double entropy_disk(const StateVector& omega);

/// Even-n witness state: the crossing of the diameter [omega_i,
/// omega_{i+n/2}] with the chord [omega_{i+1}, omega_{i+n/2+2}]. Both
/// chords join perfectly distinguishable pairs, so the state carries two
/// competing decompositions. Requires even n >= 6 (the chords degenerate
/// at n = 4).
struct OmegaP {
  StateVector state;
  Decomposition decomp_a;  // over {omega_i, omega_{i+n/2}}
  Decomposition decomp_b;  // over {omega_{i+1}, omega_{i+n/2+2}}
  ChordSplit split_a;      // (x, y), measured from omega_i
  ChordSplit split_b;      // (s, t), measured from omega_{i+1}
};
OmegaP construct_omega_P(const PolygonSpec& spec, int i);

/// Midpoint of the edge opposite omega_i (odd n >= 5); the unique
/// non-pure state perfectly distinguishable from omega_i.
StateVector construct_omega_A(const PolygonSpec& spec, int i);

/// Odd-n witness: crossing of [omega_i, omega_A] with
/// [omega_{i+1}, omega_{i+(n+1)/2}].
struct OmegaQ {
  StateVector state;
  Decomposition decomp_a;  // over {omega_A (named), omega_i}
  Decomposition decomp_b;  // over {omega_{i+1}, omega_{i+(n+1)/2}}
  ChordSplit split_a;      // (p, q), measured from omega_i
  ChordSplit split_b;      // (u, v), measured from omega_{i+1}
};
OmegaQ construct_omega_Q(const PolygonSpec& spec, int i);

/// Odd-n witness: crossing of [omega_i, omega_A] with the symmetric chord
/// [omega_{i+j}, omega_{i+n-j}], j = (n+1)/4 for n = 3 (mod 4) and
/// (n-1)/4 for n = 1 (mod 4). The symmetric pair splits evenly.
struct OmegaR {
  StateVector state;
  Decomposition decomp_a;  // over {omega_A (named), omega_i}
  Decomposition decomp_b;  // over {omega_{i+j}, omega_{i+n-j}}, weights (1/2, 1/2)
  ChordSplit split_a;      // (w, z), measured from omega_i
  ChordSplit split_b;
  int j = 0;
};
OmegaR construct_omega_R(const PolygonSpec& spec, int i);

/// S(omega_A) forced by the omega_Q construction, as a closed form in
/// alpha = sin(pi/2n). Cross-checked against the equivalent binary-entropy
/// form in c = cos(pi/n) to 1e-12.
double closed_form_S_A_first(int n);

/// S(omega_A) forced by the omega_R construction, sign branch by n mod 4.
/// Cross-checked against the equivalent binary-entropy form to 1e-12.
double closed_form_S_A_second(int n);

enum class Verdict { consistent, inconsistent, external };

/// Outcome of the consistency check for one theory. `witness_values` are
/// the independently derived entropy values (nats) whose disagreement, if
/// any, is `gap`.
struct ConsistencyReport {
  PolygonSpec theory;
  Verdict verdict = Verdict::consistent;
  std::vector<std::pair<std::string, double>> witness_values;
  double gap = 0.0;
};

/// Decides whether a mixing entropy consistent across decompositions
/// exists for the theory: yes for n = 3 and the disk, no (with an explicit
/// witness gap) for every other n; n = 4 is reported as settled externally.
/// For odd n the closed forms are revalidated against the raw chord
/// geometry within 1e-9.
ConsistencyReport verify_theorem(const PolygonSpec& spec);

}  // namespace ngon
