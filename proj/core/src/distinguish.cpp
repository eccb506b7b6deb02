#include "ngon/distinguish.hpp"

#include <algorithm>
#include <cmath>

#include "ngon/lp.hpp"

namespace ngon {

namespace {

Witness two_outcome_witness(const PolygonSpec& spec, int effect_index,
                            bool first_state_gets_complement) {
  EffectVector e = pure_effect(spec, effect_index);
  EffectVector ebar = complement(e);
  if (first_state_gets_complement) {
    return {Measurement({std::move(ebar), std::move(e)}), {0, 1}};
  }
  return {Measurement({std::move(e), std::move(ebar)}), {0, 1}};
}

bool near_vertex(const PolygonSpec& spec, int i, const Vec3& v, double tolerance) {
  return distance(pure_state(spec, i).coords(), v) <= tolerance;
}

}  // namespace

std::optional<double> edge_parameter(const EdgeSegment& edge, const Vec3& v,
                                     double tolerance) {
  const Vec3 a = pure_state(edge.theory, edge.k - 1).coords();
  const Vec3 b = pure_state(edge.theory, edge.k).coords();
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double s = ((v.x - a.x) * dx + (v.y - a.y) * dy) / len2;  // fraction a -> b
  s = std::clamp(s, 0.0, 1.0);
  const Vec3 proj{a.x + s * dx, a.y + s * dy, 1.0};
  if (std::abs(v.z - 1.0) > tolerance || distance(proj, v) > tolerance) {
    return std::nullopt;
  }
  return 1.0 - s;  // weight of omega_{k-1}
}

bool witness_valid(const Witness& w, std::span<const StateVector> states,
                   double tolerance) {
  if (w.mapping.size() != states.size()) return false;
  const auto& effects = w.measurement.effects();
  for (int idx : w.mapping) {
    if (idx < 0 || idx >= static_cast<int>(effects.size())) return false;
  }
  for (std::size_t k = 0; k < states.size(); ++k) {
    for (std::size_t j = 0; j < states.size(); ++j) {
      const double p = evaluate(effects[w.mapping[k]], states[j]);
      const double want = (k == j) ? 1.0 : 0.0;
      if (std::abs(p - want) > tolerance) return false;
    }
  }
  return true;
}

std::optional<Witness> closed_form_pair(const PolygonSpec& spec,
                                        const StateVector& a,
                                        const StateVector& b) {
  if (!(a.theory() == spec) || !(b.theory() == spec)) {
    throw std::invalid_argument("closed_form_pair: state from a different theory");
  }
  const double tolerance = tol::kMembership;

  if (spec.is_infinite()) {
    const Vec3& pa = a.coords();
    const Vec3& pb = b.coords();
    const bool pure = std::abs(planar_norm(pa) - 1.0) <= tolerance &&
                      std::abs(planar_norm(pb) - 1.0) <= tolerance;
    const bool antipodal = std::hypot(pa.x + pb.x, pa.y + pb.y) <= tolerance;
    if (!pure || !antipodal) return std::nullopt;
    EffectVector e = pure_effect_angle(spec, std::atan2(pa.y, pa.x));
    EffectVector ebar = complement(e);
    return Witness{Measurement({std::move(e), std::move(ebar)}), {0, 1}};
  }

  const int n = spec.sides();
  if (n % 2 == 0) {
    // e_i is 1 on the edge [i-1, i] and 0 on the opposite edge.
    for (int i = 0; i < n; ++i) {
      const EdgeSegment lit{spec, i};
      const EdgeSegment dark{spec, i + n / 2};
      if (edge_parameter(lit, a.coords()) && edge_parameter(dark, b.coords())) {
        return two_outcome_witness(spec, i, false);
      }
      if (edge_parameter(lit, b.coords()) && edge_parameter(dark, a.coords())) {
        return two_outcome_witness(spec, i, true);
      }
    }
    return std::nullopt;
  }

  // Odd n: e_i is 1 only at the vertex omega_i and 0 on the opposite edge.
  for (int i = 0; i < n; ++i) {
    const EdgeSegment dark{spec, i + (n + 1) / 2};
    if (near_vertex(spec, i, a.coords(), tolerance) &&
        edge_parameter(dark, b.coords())) {
      return two_outcome_witness(spec, i, false);
    }
    if (near_vertex(spec, i, b.coords(), tolerance) &&
        edge_parameter(dark, a.coords())) {
      return two_outcome_witness(spec, i, true);
    }
  }
  return std::nullopt;
}

std::optional<Witness> lp_distinguishable(const PolygonSpec& spec,
                                          std::span<const StateVector> states) {
  if (spec.is_infinite()) {
    throw std::invalid_argument(
        "lp_distinguishable: the disk has infinitely many pure-state "
        "constraints; use closed_form_pair");
  }
  const int n = spec.sides();
  const int m = static_cast<int>(states.size());
  if (m < 1) throw std::invalid_argument("lp_distinguishable: empty state list");
  if (m > n) {
    throw std::invalid_argument("lp_distinguishable: more states (" +
                                std::to_string(m) + ") than vertices (" +
                                std::to_string(n) + ")");
  }
  for (const StateVector& s : states) {
    if (!(s.theory() == spec)) {
      throw std::invalid_argument("lp_distinguishable: state from a different theory");
    }
  }
  if (m == 1) {
    return Witness{Measurement({unit_effect(spec)}), {0}};
  }

  // Variables: effect k occupies coordinates [3k, 3k+3).
  LinearProgram lp;
  lp.num_vars = 3 * m;

  auto block_row = [&](int k, const Vec3& v) {
    std::vector<double> row(lp.num_vars, 0.0);
    row[3 * k] = v.x;
    row[3 * k + 1] = v.y;
    row[3 * k + 2] = v.z;
    return row;
  };

  // sum_k e_k = u
  for (int c = 0; c < 3; ++c) {
    std::vector<double> row(lp.num_vars, 0.0);
    for (int k = 0; k < m; ++k) row[3 * k + c] = 1.0;
    lp.eq_rows.push_back(std::move(row));
    lp.eq_rhs.push_back(c == 2 ? 1.0 : 0.0);
  }
  // e_k(state_j) = delta_kj
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < m; ++j) {
      lp.eq_rows.push_back(block_row(k, states[j].coords()));
      lp.eq_rhs.push_back(k == j ? 1.0 : 0.0);
    }
  }
  // 0 <= e_k(omega_i) <= 1 for every pure state: e_k in E(Omega_n)
  for (int k = 0; k < m; ++k) {
    for (int i = 0; i < n; ++i) {
      lp.ineq_rows.push_back(block_row(k, pure_state(spec, i).coords()));
      lp.ineq_lo.push_back(0.0);
      lp.ineq_hi.push_back(1.0);
    }
  }

  const FeasibilityResult res = solve_feasibility(lp);
  if (res.verdict == Feasibility::infeasible) return std::nullopt;

  const std::vector<double>& x = *res.point;
  std::vector<EffectVector> effects;
  effects.reserve(m);
  std::vector<int> mapping(m);
  for (int k = 0; k < m; ++k) {
    effects.emplace_back(spec, Vec3{x[3 * k], x[3 * k + 1], x[3 * k + 2]});
    mapping[k] = k;
  }
  Witness w{Measurement(std::move(effects)), std::move(mapping)};
  if (!witness_valid(w, states)) {
    throw std::logic_error(
        "lp_distinguishable: feasible point does not certify the witness "
        "within tolerance 1e-9");
  }
  return w;
}

int max_distinguishable_size(const PolygonSpec& spec, int sweep_limit) {
  if (spec.is_infinite()) return 2;
  const int n = spec.sides();
  if (n > sweep_limit) {
    throw std::invalid_argument("max_distinguishable_size: exhaustive sweep "
                                "limited to n <= " + std::to_string(sweep_limit));
  }

  std::vector<StateVector> vertices;
  vertices.reserve(n);
  for (int i = 0; i < n; ++i) vertices.push_back(pure_state(spec, i));

  int best = 1;
  for (int m = 2; m <= n; ++m) {
    // Subsets of a distinguishable set stay distinguishable, so the first
    // size with no feasible subset ends the sweep.
    std::vector<int> pick(m);
    for (int i = 0; i < m; ++i) pick[i] = i;
    bool any = false;
    while (true) {
      std::vector<StateVector> subset;
      subset.reserve(m);
      for (int idx : pick) subset.push_back(vertices[idx]);
      if (lp_distinguishable(spec, subset)) {
        any = true;
        break;
      }
      int j = m - 1;
      while (j >= 0 && pick[j] == n - m + j) --j;
      if (j < 0) break;
      ++pick[j];
      for (int l = j + 1; l < m; ++l) pick[l] = pick[l - 1] + 1;
    }
    if (!any) break;
    best = m;
  }
  return best;
}

}  // namespace ngon
