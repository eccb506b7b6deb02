#include "ngon/mixing.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace ngon {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

double xlogx(double t) { return t <= 0.0 ? 0.0 : t * std::log(t); }

std::string index_name(const PolygonSpec& spec, int i) {
  return "omega_" + std::to_string(reduce_index(spec, i));
}

Component pure_component(double weight, const PolygonSpec& spec, int i) {
  return {weight, pure_state(spec, i), index_name(spec, i), true};
}

void require_odd(const PolygonSpec& spec, const char* who) {
  if (spec.is_infinite() || spec.sides() % 2 == 0 || spec.sides() < 5) {
    throw std::invalid_argument(std::string(who) + ": requires odd n >= 5 (got " +
                                spec.label() + ")");
  }
}

Witness pair_witness(const PolygonSpec& spec, int effect_index,
                     bool first_state_gets_complement) {
  EffectVector e = pure_effect(spec, effect_index);
  EffectVector ebar = complement(e);
  if (first_state_gets_complement) {
    return {Measurement({std::move(ebar), std::move(e)}), {0, 1}};
  }
  return {Measurement({std::move(e), std::move(ebar)}), {0, 1}};
}

}  // namespace

Decomposition make_decomposition(StateVector target,
                                 std::vector<Component> components,
                                 Witness witness) {
  std::vector<double> w;
  std::vector<Vec3> pts;
  std::vector<StateVector> states;
  w.reserve(components.size());
  states.reserve(components.size());
  for (const Component& c : components) {
    w.push_back(c.weight);
    pts.push_back(c.state.coords());
    states.push_back(c.state);
  }
  const ProbWeights weights(std::move(w));
  const Vec3 rebuilt = convex_combine(pts, weights);
  const double err = distance(rebuilt, target.coords());
  if (err > tol::kMembership) {
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "make_decomposition: components rebuild the target to %.3e "
                  "(> tolerance 1e-9)", err);
    throw std::invalid_argument(buf);
  }
  if (!witness_valid(witness, states)) {
    throw std::invalid_argument(
        "make_decomposition: witness does not perfectly distinguish the "
        "components (tolerance 1e-9)");
  }
  return {std::move(components), std::move(target), std::move(witness)};
}

double EntropyExpr::value() const {
  if (unknown) {
    throw std::logic_error("EntropyExpr: unresolved unknown S(" + *unknown + ")");
  }
  return constant;
}

EntropyExpr entropy_of_decomposition(const Decomposition& d,
                                     const std::map<std::string, double>& known) {
  std::vector<double> w;
  w.reserve(d.components.size());
  for (const Component& c : d.components) w.push_back(c.weight);

  EntropyExpr expr;
  expr.constant = shannon_entropy(ProbWeights(std::move(w)));
  for (const Component& c : d.components) {
    if (c.is_pure) continue;  // pure states carry zero entropy
    if (auto it = known.find(c.symbol); it != known.end()) {
      expr.constant += c.weight * it->second;
    } else if (!expr.unknown) {
      expr.unknown = c.symbol;
      expr.coefficient = c.weight;
    } else if (*expr.unknown == c.symbol) {
      expr.coefficient += c.weight;
    } else {
      throw std::invalid_argument("entropy_of_decomposition: two unknowns, S(" +
                                  *expr.unknown + ") and S(" + c.symbol + ")");
    }
  }
  return expr;
}

double solve_unknown(const EntropyExpr& expr, double target) {
  if (!expr.unknown || expr.coefficient == 0.0) {
    throw std::invalid_argument("solve_unknown: expression has no unknown term");
  }
  return (target - expr.constant) / expr.coefficient;
}

double entropy_trit(const StateVector& omega) {
  const PolygonSpec& spec = omega.theory();
  if (spec.is_infinite() || spec.sides() != 3) {
    throw std::invalid_argument("entropy_trit: state must live in Omega_3 (got Omega_" +
                                spec.label() + ")");
  }
  const ProbWeights w = barycentric_triangle(
      omega.coords(), pure_state(spec, 0).coords(), pure_state(spec, 1).coords(),
      pure_state(spec, 2).coords());
  return shannon_entropy(w);
}

double entropy_disk(const StateVector& omega) {
  if (!omega.theory().is_infinite()) {
    throw std::invalid_argument(
        "entropy_disk: state must live in the disk (got Omega_" +
        omega.theory().label() + ")");
  }
  const double rho = std::min(planar_norm(omega.coords()), 1.0);
  return binary_entropy(0.5 * (1.0 + rho));
}

OmegaP construct_omega_P(const PolygonSpec& spec, int i) {
  if (spec.is_infinite() || spec.sides() % 2 == 1) {
    throw std::invalid_argument("construct_omega_P: requires even n (got " +
                                spec.label() + ")");
  }
  const int n = spec.sides();
  if (n == 4) {
    throw std::invalid_argument(
        "construct_omega_P: degenerate at n = 4 (omega_{i+n/2+2} wraps back "
        "to omega_i)");
  }

  const StateVector a1 = pure_state(spec, i);
  const StateVector a2 = pure_state(spec, i + n / 2);
  const StateVector b1 = pure_state(spec, i + 1);
  const StateVector b2 = pure_state(spec, i + n / 2 + 2);

  const ChordIntersection cut =
      chord_intersection(a1.coords(), a2.coords(), b1.coords(), b2.coords());
  StateVector state(spec, cut.point);

  const double ra = cut.split_a.ratio();  // x/(x+y)
  const double rb = cut.split_b.ratio();  // s/(s+t)
  if (ra > 0.5 + tol::kIdentity || rb > 0.5 + tol::kIdentity) {
    throw std::logic_error(
        "construct_omega_P: expected the crossing on the near half of both "
        "chords (x <= y, s <= t)");
  }

  Decomposition da = make_decomposition(
      state,
      {pure_component(1.0 - ra, spec, i), pure_component(ra, spec, i + n / 2)},
      pair_witness(spec, i, false));
  Decomposition db = make_decomposition(
      state,
      {pure_component(1.0 - rb, spec, i + 1),
       pure_component(rb, spec, i + n / 2 + 2)},
      pair_witness(spec, i + 2, false));

  return {std::move(state), std::move(da), std::move(db), cut.split_a, cut.split_b};
}

StateVector construct_omega_A(const PolygonSpec& spec, int i) {
  require_odd(spec, "construct_omega_A");
  const int n = spec.sides();
  const Vec3 a = pure_state(spec, i + (n - 1) / 2).coords();
  const Vec3 b = pure_state(spec, i + (n + 1) / 2).coords();
  return StateVector(spec, 0.5 * (a + b));
}

OmegaQ construct_omega_Q(const PolygonSpec& spec, int i) {
  require_odd(spec, "construct_omega_Q");
  const int n = spec.sides();

  const StateVector wi = pure_state(spec, i);
  const StateVector wa = construct_omega_A(spec, i);
  const StateVector b1 = pure_state(spec, i + 1);
  const StateVector b2 = pure_state(spec, i + (n + 1) / 2);

  const ChordIntersection cut =
      chord_intersection(wi.coords(), wa.coords(), b1.coords(), b2.coords());
  StateVector state(spec, cut.point);

  const double weight_a = cut.split_a.ratio();  // p/(p+q)
  Decomposition da = make_decomposition(
      state,
      {Component{weight_a, wa, "omega_A", false},
       pure_component(1.0 - weight_a, spec, i)},
      pair_witness(spec, i, true));

  const double rb = cut.split_b.ratio();  // u/(u+v), weight of omega_{i+(n+1)/2}
  Decomposition db = make_decomposition(
      state,
      {pure_component(1.0 - rb, spec, i + 1),
       pure_component(rb, spec, i + (n + 1) / 2)},
      pair_witness(spec, i + 1, false));

  return {std::move(state), std::move(da), std::move(db), cut.split_a, cut.split_b};
}

OmegaR construct_omega_R(const PolygonSpec& spec, int i) {
  require_odd(spec, "construct_omega_R");
  const int n = spec.sides();
  const int j = (n % 4 == 3) ? (n + 1) / 4 : (n - 1) / 4;

  const StateVector wi = pure_state(spec, i);
  const StateVector wa = construct_omega_A(spec, i);
  const StateVector b1 = pure_state(spec, i + j);
  const StateVector b2 = pure_state(spec, i + n - j);

  const ChordIntersection cut =
      chord_intersection(wi.coords(), wa.coords(), b1.coords(), b2.coords());
  StateVector state(spec, cut.point);

  // The crossing sits on the symmetry axis, so the second chord splits evenly.
  if (std::abs(cut.split_b.ratio() - 0.5) > tol::kIdentity) {
    throw std::logic_error(
        "construct_omega_R: symmetric chord did not split 1:1 within 1e-10");
  }

  const double weight_a = cut.split_a.ratio();  // w/(w+z)
  Decomposition da = make_decomposition(
      state,
      {Component{weight_a, wa, "omega_A", false},
       pure_component(1.0 - weight_a, spec, i)},
      pair_witness(spec, i, true));
  Decomposition db = make_decomposition(
      state,
      {pure_component(0.5, spec, i + j), pure_component(0.5, spec, i + n - j)},
      pair_witness(spec, i + j, false));

  return {std::move(state), std::move(da), std::move(db),
          cut.split_a, cut.split_b, j};
}

double closed_form_S_A_first(int n) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("closed_form_S_A_first: odd n >= 3 required (got " +
                                std::to_string(n) + ")");
  }
  const double a2 = std::pow(std::sin(kPi / (2.0 * n)), 2);
  const double primary =
      2.0 * a2 * kLn2 + 0.5 * xlogx(1.0 - 4.0 * a2) - xlogx(1.0 - 2.0 * a2);

  const double c = std::cos(kPi / n);
  const double alt = 0.5 * (2.0 * c + 1.0) *
                     (binary_entropy(1.0 / (2.0 * c + 1.0)) -
                      binary_entropy(2.0 / (2.0 * c + 1.0)));
  if (std::abs(primary - alt) > tol::kClosedForm) {
    throw std::logic_error(
        "closed_form_S_A_first: the two algebraic forms disagree beyond 1e-12");
  }
  return primary;
}

double closed_form_S_A_second(int n) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("closed_form_S_A_second: odd n >= 3 required (got " +
                                std::to_string(n) + ")");
  }
  // Upper sign for n = 3 (mod 4), lower for n = 1 (mod 4).
  const double sign = (n % 4 == 3) ? -1.0 : 1.0;
  const double a = std::sin(kPi / (2.0 * n));
  const double primary =
      xlogx(1.0 + sign * 2.0 * a) - (2.0 + sign * 2.0 * a) * std::log1p(sign * a);

  const double d = 2.0 + sign * 2.0 * a;
  const double alt = d * (kLn2 - binary_entropy(1.0 / d));
  if (std::abs(primary - alt) > tol::kClosedForm) {
    throw std::logic_error(
        "closed_form_S_A_second: the two algebraic forms disagree beyond 1e-12");
  }
  return primary;
}

ConsistencyReport verify_theorem(const PolygonSpec& spec) {
  ConsistencyReport report{spec, Verdict::consistent, {}, 0.0};

  if (spec.is_infinite()) {
    // Every diameter decomposition of a disk state carries the same
    // weights, so entropy_disk is single-valued; the odd closed forms both
    // vanish in the alpha -> 0 limit.
    report.witness_values = {
        {"disk center entropy", entropy_disk(StateVector(spec, {0.0, 0.0, 1.0}))},
        {"S(omega_A) limit via omega_Q route", 0.0},
        {"S(omega_A) limit via omega_R route", 0.0},
    };
    report.gap = 0.0;
    return report;
  }

  const int n = spec.sides();
  if (n == 3) {
    const double first = closed_form_S_A_first(3);
    const double second = closed_form_S_A_second(3);
    report.witness_values = {
        {"S(omega_A) via omega_Q route", first},
        {"S(omega_A) via omega_R route", second},
        {"trit center entropy", entropy_trit(StateVector(spec, {0.0, 0.0, 1.0}))},
    };
    report.gap = std::abs(first - second);
    return report;
  }
  if (n == 4) {
    report.verdict = Verdict::external;
    return report;
  }

  if (n % 2 == 0) {
    const OmegaP p = construct_omega_P(spec, 0);
    const double via_a = entropy_of_decomposition(p.decomp_a).value();
    const double via_b = entropy_of_decomposition(p.decomp_b).value();
    report.witness_values = {
        {"S(omega_P) via {omega_0, omega_" + std::to_string(n / 2) + "}", via_a},
        {"S(omega_P) via {omega_1, omega_" + std::to_string(n / 2 + 2) + "}", via_b},
    };
    report.gap = std::abs(via_a - via_b);
  } else {
    const double first = closed_form_S_A_first(n);
    const double second = closed_form_S_A_second(n);

    // Revalidate both closed forms against the raw chord geometry.
    const OmegaQ q = construct_omega_Q(spec, 0);
    const EntropyExpr exprQ = entropy_of_decomposition(q.decomp_a);
    const double geo_first =
        solve_unknown(exprQ, entropy_of_decomposition(q.decomp_b).value());
    const OmegaR r = construct_omega_R(spec, 0);
    const EntropyExpr exprR = entropy_of_decomposition(r.decomp_a);
    const double geo_second =
        solve_unknown(exprR, entropy_of_decomposition(r.decomp_b).value());
    if (std::abs(geo_first - first) > tol::kMembership ||
        std::abs(geo_second - second) > tol::kMembership) {
      throw std::logic_error(
          "verify_theorem: chord geometry disagrees with the closed forms "
          "beyond 1e-9 at n = " + std::to_string(n));
    }

    report.witness_values = {
        {"S(omega_A) via omega_Q route", first},
        {"S(omega_A) via omega_R route", second},
    };
    report.gap = std::abs(first - second);
  }

  if (report.gap <= tol::kGap) {
    throw std::runtime_error(
        "verify_theorem: witness gap at n = " + std::to_string(n) +
        " fell below the inconsistency threshold 1e-8; the double-precision "
        "witness has lost resolution");
  }
  report.verdict = Verdict::inconsistent;
  return report;
}

}  // namespace ngon
