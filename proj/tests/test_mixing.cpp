#include "ngon/mixing.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ngon;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
constexpr double kLn3 = 1.0986122886681097;

double reconstruction_error(const Decomposition& d) {
  std::vector<Vec3> pts;
  std::vector<double> w;
  for (const Component& c : d.components) {
    pts.push_back(c.state.coords());
    w.push_back(c.weight);
  }
  return distance(convex_combine(pts, ProbWeights(w)), d.target.coords());
}

std::vector<StateVector> component_states(const Decomposition& d) {
  std::vector<StateVector> out;
  for (const Component& c : d.components) out.push_back(c.state);
  return out;
}

void check_decomposition(const Decomposition& d) {
  CHECK(reconstruction_error(d) < 1e-9);
  CHECK(witness_valid(d.witness, component_states(d)));
}

// Entropy the omega_Q construction forces on omega_A, straight from the
// measured chord splits.
double geometric_S_A_first(const OmegaQ& q) {
  const double p = q.split_a.near, qq = q.split_a.far;
  const double u = q.split_b.near, v = q.split_b.far;
  return (p + qq) / p * (binary_entropy(u / (u + v)) - binary_entropy(p / (p + qq)));
}

double geometric_S_A_second(const OmegaR& r) {
  const double w = r.split_a.near, z = r.split_a.far;
  return (w + z) / w * (kLn2 - binary_entropy(w / (w + z)));
}

}  // namespace

TEST_CASE("entropy_trit") {
  const PolygonSpec trit = PolygonSpec::finite(3);
  CHECK(entropy_trit(StateVector(trit, {0, 0, 1})) ==
        doctest::Approx(kLn3).epsilon(1e-13));
  CHECK(entropy_trit(pure_state(trit, 1)) == doctest::Approx(0.0).epsilon(1e-12));
  const Vec3 mid = 0.5 * (pure_state(trit, 0).coords() + pure_state(trit, 1).coords());
  CHECK(entropy_trit(StateVector(trit, mid)) == doctest::Approx(kLn2).epsilon(1e-13));
  CHECK_THROWS_AS(entropy_trit(pure_state(PolygonSpec::finite(5), 0)),
                  std::invalid_argument);
}

TEST_CASE("entropy_disk") {
  const PolygonSpec disk = PolygonSpec::infinite();
  CHECK(entropy_disk(StateVector(disk, {0, 0, 1})) ==
        doctest::Approx(kLn2).epsilon(1e-15));
  CHECK(entropy_disk(pure_state_angle(disk, 2.1)) == 0.0);
  CHECK(entropy_disk(StateVector(disk, {0.5, 0, 1})) ==
        doctest::Approx(0.56233514461880835).epsilon(1e-13));
  CHECK(entropy_disk(StateVector(disk, {0.3, -0.4, 1})) ==
        doctest::Approx(binary_entropy(0.75)).epsilon(1e-13));
  CHECK_THROWS_AS(entropy_disk(pure_state(PolygonSpec::finite(3), 0)),
                  std::invalid_argument);
}

TEST_CASE("entropy_of_decomposition") {
  const PolygonSpec hex = PolygonSpec::finite(6);
  const OmegaP p = construct_omega_P(hex, 0);

  SUBCASE("pure pair gives plain Shannon entropy") {
    const EntropyExpr expr = entropy_of_decomposition(p.decomp_b);
    CHECK_FALSE(expr.unknown.has_value());
    CHECK(expr.value() == doctest::Approx(kLn2).epsilon(1e-12));
  }

  SUBCASE("single pure component gives zero") {
    const StateVector v = pure_state(hex, 2);
    const Decomposition d = make_decomposition(
        v, {Component{1.0, v, "omega_2", true}},
        Witness{Measurement({unit_effect(hex)}), {0}});
    CHECK(entropy_of_decomposition(d).value() == 0.0);
  }

  SUBCASE("named component becomes the unknown") {
    const PolygonSpec pent = PolygonSpec::finite(5);
    const OmegaQ q = construct_omega_Q(pent, 0);
    const EntropyExpr expr = entropy_of_decomposition(q.decomp_a);
    REQUIRE(expr.unknown.has_value());
    CHECK(*expr.unknown == "omega_A");
    const double wa = q.decomp_a.components[0].weight;
    CHECK(expr.coefficient == doctest::Approx(wa).epsilon(1e-15));
    CHECK(expr.constant == doctest::Approx(binary_entropy(wa)).epsilon(1e-12));
    CHECK_THROWS_AS(expr.value(), std::logic_error);

    // Supplying the symbol collapses the expression to a number.
    const EntropyExpr known = entropy_of_decomposition(q.decomp_a, {{"omega_A", 0.25}});
    CHECK_FALSE(known.unknown.has_value());
    CHECK(known.value() ==
          doctest::Approx(wa * 0.25 + binary_entropy(wa)).epsilon(1e-12));

    // solve_unknown inverts the affine expression.
    const double target = 0.4;
    const double sa = solve_unknown(expr, target);
    CHECK(expr.constant + expr.coefficient * sa == doctest::Approx(target).epsilon(1e-12));
  }

  SUBCASE("two distinct unknowns are rejected") {
    const PolygonSpec pent = PolygonSpec::finite(5);
    OmegaQ q = construct_omega_Q(pent, 0);
    Decomposition d = q.decomp_a;
    d.components[1].is_pure = false;
    d.components[1].symbol = "mystery";
    CHECK_THROWS_AS(entropy_of_decomposition(d), std::invalid_argument);
  }
}

TEST_CASE("make_decomposition validates") {
  const PolygonSpec hex = PolygonSpec::finite(6);
  const StateVector target(hex, {0, 0, 1});
  const StateVector w0 = pure_state(hex, 0);
  const StateVector w3 = pure_state(hex, 3);
  const Witness w{Measurement({pure_effect(hex, 0), complement(pure_effect(hex, 0))}),
                  {0, 1}};

  CHECK_NOTHROW(make_decomposition(target,
                                   {Component{0.5, w0, "omega_0", true},
                                    Component{0.5, w3, "omega_3", true}},
                                   w));
  // Wrong weights: does not rebuild the target.
  CHECK_THROWS_AS(make_decomposition(target,
                                     {Component{0.9, w0, "omega_0", true},
                                      Component{0.1, w3, "omega_3", true}},
                                     w),
                  std::invalid_argument);
  // Witness that does not distinguish the listed states.
  const Witness bad{Measurement({pure_effect(hex, 1), complement(pure_effect(hex, 1))}),
                    {1, 0}};
  CHECK_THROWS_AS(make_decomposition(target,
                                     {Component{0.5, w0, "omega_0", true},
                                      Component{0.5, w3, "omega_3", true}},
                                     bad),
                  std::invalid_argument);
}

TEST_CASE("construct_omega_P on the hexagon") {
  const PolygonSpec hex = PolygonSpec::finite(6);
  const OmegaP p = construct_omega_P(hex, 0);

  CHECK(p.state.coords().x == doctest::Approx(radius(hex) / 2).epsilon(1e-13));
  CHECK(std::abs(p.state.coords().y) < 1e-13);
  CHECK(p.split_a.ratio() == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(p.split_b.ratio() == doctest::Approx(0.5).epsilon(1e-13));

  check_decomposition(p.decomp_a);
  check_decomposition(p.decomp_b);
  CHECK(p.decomp_a.components[1].weight == doctest::Approx(0.25).epsilon(1e-13));

  CHECK_THROWS_AS(construct_omega_P(PolygonSpec::finite(4), 0), std::invalid_argument);
  CHECK_THROWS_AS(construct_omega_P(PolygonSpec::finite(5), 0), std::invalid_argument);
  CHECK_THROWS_AS(construct_omega_P(PolygonSpec::infinite(), 0), std::invalid_argument);
}

TEST_CASE("omega_P splits obey the sine-theorem relation") {
  for (int n = 6; n <= 32; n += 2) {
    const PolygonSpec spec = PolygonSpec::finite(n);
    const OmegaP p = construct_omega_P(spec, 0);
    const double x = p.split_a.near, y = p.split_a.far;
    const double s = p.split_b.near, t = p.split_b.far;
    CHECK(x <= y + 1e-12);
    CHECK(s <= t + 1e-12);
    const double k = std::cos(2 * kPi / n) / std::cos(kPi / n);
    CHECK(s / (s + t) == doctest::Approx(x / (x + k * k * y)).epsilon(1e-10));
  }
}

TEST_CASE("construct_omega_A") {
  const PolygonSpec pent = PolygonSpec::finite(5);
  const StateVector a = construct_omega_A(pent, 0);
  CHECK(a.coords().x == doctest::Approx(-0.89945371997393364).epsilon(1e-13));
  CHECK(std::abs(a.coords().y) < 1e-13);
  CHECK(std::abs(evaluate(pure_effect(pent, 0), a)) < 1e-12);

  const PolygonSpec sept = PolygonSpec::finite(7);
  const StateVector a7 = construct_omega_A(sept, 3);
  CHECK(contains_state(sept, a7.coords()));
  const auto param = edge_parameter({sept, 0}, a7.coords());  // edge [6, 0]
  REQUIRE(param.has_value());
  CHECK(*param == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(construct_omega_A(PolygonSpec::finite(6), 0), std::invalid_argument);
  CHECK_THROWS_AS(construct_omega_A(PolygonSpec::finite(3), 0), std::invalid_argument);
}

TEST_CASE("construct_omega_Q on the pentagon") {
  const PolygonSpec pent = PolygonSpec::finite(5);
  const OmegaQ q = construct_omega_Q(pent, 0);

  CHECK(q.state.coords().x == doctest::Approx(-0.42466444105781742).epsilon(1e-13));
  CHECK(std::abs(q.state.coords().y) < 1e-13);
  CHECK(q.decomp_a.components[0].weight ==
        doctest::Approx(0.76393202250021030).epsilon(1e-13));
  CHECK(q.split_a.far / q.split_a.near ==
        doctest::Approx(0.30901699437494742).epsilon(1e-12));  // q/p
  CHECK(q.split_b.near / q.split_b.far ==
        doctest::Approx(1.6180339887498948).epsilon(1e-12));  // u/v
  CHECK(q.split_b.ratio() == doctest::Approx(0.61803398874989485).epsilon(1e-12));

  check_decomposition(q.decomp_a);
  check_decomposition(q.decomp_b);
  CHECK_THROWS_AS(construct_omega_Q(PolygonSpec::finite(6), 0), std::invalid_argument);
}

TEST_CASE("construct_omega_R on the pentagon and heptagon") {
  const PolygonSpec pent = PolygonSpec::finite(5);
  const OmegaR r5 = construct_omega_R(pent, 0);
  CHECK(r5.j == 1);
  CHECK(r5.state.coords().x == doctest::Approx(0.34356074972251246).epsilon(1e-13));
  CHECK(std::abs(r5.state.coords().y) < 1e-13);
  CHECK(r5.decomp_a.components[0].weight ==
        doctest::Approx(0.38196601125010515).epsilon(1e-13));
  CHECK(r5.split_a.far / r5.split_a.near ==
        doctest::Approx(1.6180339887498948).epsilon(1e-12));  // z/w, lower sign
  CHECK(r5.decomp_b.components[0].weight == 0.5);
  check_decomposition(r5.decomp_a);
  check_decomposition(r5.decomp_b);

  const OmegaR r7 = construct_omega_R(PolygonSpec::finite(7), 0);
  CHECK(r7.j == 2);
  CHECK(r7.split_a.far / r7.split_a.near ==
        doctest::Approx(0.55495813208737119).epsilon(1e-11));  // z/w, upper sign

  CHECK_THROWS_AS(construct_omega_R(PolygonSpec::finite(8), 0), std::invalid_argument);
}

TEST_CASE("appendix ratios hold for all base indices") {
  for (int n : {5, 7, 9, 11, 13}) {
    const PolygonSpec spec = PolygonSpec::finite(n);
    const double c = std::cos(kPi / n);
    const double alpha = std::sin(kPi / (2 * n));
    const double zw_expected = (n % 4 == 3) ? 1.0 - 2.0 * alpha : 1.0 + 2.0 * alpha;
    for (int i = 0; i < n; ++i) {
      const OmegaQ q = construct_omega_Q(spec, i);
      CHECK(q.split_b.near / q.split_b.far == doctest::Approx(2.0 * c).epsilon(1e-10));
      CHECK(q.split_a.far / q.split_a.near ==
            doctest::Approx((2.0 * c - 1.0) / 2.0).epsilon(1e-10));
      const OmegaR r = construct_omega_R(spec, i);
      CHECK(r.split_a.far / r.split_a.near ==
            doctest::Approx(zw_expected).epsilon(1e-10));
    }
  }
}

TEST_CASE("closed forms at the classical endpoint") {
  CHECK(closed_form_S_A_first(3) == doctest::Approx(kLn2).epsilon(1e-12));
  CHECK(closed_form_S_A_second(3) == doctest::Approx(kLn2).epsilon(1e-12));
}

TEST_CASE("closed forms on the pentagon") {
  CHECK(closed_form_S_A_first(5) == doctest::Approx(0.15513600435494026).epsilon(1e-13));
  CHECK(closed_form_S_A_second(5) == doctest::Approx(0.073642139058083524).epsilon(1e-13));
  CHECK(closed_form_S_A_first(5) - closed_form_S_A_second(5) ==
        doctest::Approx(0.081493865296856737).epsilon(1e-12));
}

TEST_CASE("closed forms vanish as n grows") {
  CHECK(closed_form_S_A_first(101) == doctest::Approx(3.3540461352868697e-4).epsilon(1e-10));
  CHECK(closed_form_S_A_second(101) == doctest::Approx(2.3816441960903059e-4).epsilon(1e-10));
  CHECK(closed_form_S_A_first(101) < 1e-3);
  CHECK(closed_form_S_A_second(101) < 1e-3);
  CHECK_THROWS_AS(closed_form_S_A_first(6), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_S_A_second(6), std::invalid_argument);
}

TEST_CASE("closed forms match their binary-entropy variants") {
  // Each call self-checks to 1e-12; recompute the variants here as well.
  for (int n = 3; n <= 99; n += 2) {
    const double c = std::cos(kPi / n);
    const double first_alt = 0.5 * (2 * c + 1) *
                             (binary_entropy(1.0 / (2 * c + 1)) -
                              binary_entropy(2.0 / (2 * c + 1)));
    CHECK(closed_form_S_A_first(n) == doctest::Approx(first_alt).epsilon(1e-12));

    const double alpha = std::sin(kPi / (2 * n));
    const double d = (n % 4 == 3) ? 2.0 - 2.0 * alpha : 2.0 + 2.0 * alpha;
    const double second_alt = d * (kLn2 - binary_entropy(1.0 / d));
    CHECK(closed_form_S_A_second(n) == doctest::Approx(second_alt).epsilon(1e-12));
  }
}

TEST_CASE("chord geometry reproduces the closed forms") {
  for (int n = 5; n <= 21; n += 2) {
    const PolygonSpec spec = PolygonSpec::finite(n);
    const OmegaQ q = construct_omega_Q(spec, 0);
    CHECK(std::abs(geometric_S_A_first(q) - closed_form_S_A_first(n)) < 1e-9);
    const OmegaR r = construct_omega_R(spec, 0);
    CHECK(std::abs(geometric_S_A_second(r) - closed_form_S_A_second(n)) < 1e-9);
  }
}

TEST_CASE("verify_theorem verdicts") {
  const ConsistencyReport trit = verify_theorem(PolygonSpec::finite(3));
  CHECK(trit.verdict == Verdict::consistent);
  CHECK(trit.gap <= 1e-12);

  const ConsistencyReport square = verify_theorem(PolygonSpec::finite(4));
  CHECK(square.verdict == Verdict::external);

  const ConsistencyReport pent = verify_theorem(PolygonSpec::finite(5));
  CHECK(pent.verdict == Verdict::inconsistent);
  CHECK(pent.gap == doctest::Approx(0.081493865296856737).epsilon(1e-12));

  const ConsistencyReport hex = verify_theorem(PolygonSpec::finite(6));
  CHECK(hex.verdict == Verdict::inconsistent);
  CHECK(hex.gap == doctest::Approx(0.13081203594113696).epsilon(1e-12));
  CHECK(hex.witness_values.size() == 2);
  CHECK(hex.witness_values[0].second == doctest::Approx(0.56233514461880835).epsilon(1e-12));
  CHECK(hex.witness_values[1].second == doctest::Approx(kLn2).epsilon(1e-12));

  const ConsistencyReport disk = verify_theorem(PolygonSpec::infinite());
  CHECK(disk.verdict == Verdict::consistent);
  CHECK(disk.gap == 0.0);

  for (int n = 5; n <= 32; ++n) {
    if (n == 5 || n == 6) continue;
    CHECK(verify_theorem(PolygonSpec::finite(n)).verdict == Verdict::inconsistent);
  }
}

TEST_CASE("witness gap does not depend on the base index") {
  for (int n : {6, 8}) {
    const PolygonSpec spec = PolygonSpec::finite(n);
    const double reference = verify_theorem(spec).gap;
    for (int i = 0; i < n; ++i) {
      const OmegaP p = construct_omega_P(spec, i);
      const double gap = std::abs(entropy_of_decomposition(p.decomp_a).value() -
                                  entropy_of_decomposition(p.decomp_b).value());
      CHECK(gap == doctest::Approx(reference).epsilon(1e-10));
    }
  }
  for (int n : {5, 7}) {
    const PolygonSpec spec = PolygonSpec::finite(n);
    const double reference = verify_theorem(spec).gap;
    for (int i = 0; i < n; ++i) {
      const double gap = std::abs(geometric_S_A_first(construct_omega_Q(spec, i)) -
                                  geometric_S_A_second(construct_omega_R(spec, i)));
      CHECK(gap == doctest::Approx(reference).epsilon(1e-9));
    }
  }
}

TEST_CASE("gap stays positive and shrinks toward the disk") {
  // The two sign branches interleave, so the decrease is per branch.
  double previous[4] = {0, -1.0, 0, -1.0};
  for (int n = 5; n <= 101; n += 2) {
    const double gap = closed_form_S_A_first(n) - closed_form_S_A_second(n);
    CHECK(gap > 0.0);
    double& prev = previous[n % 4];
    if (prev > 0.0) CHECK(gap < prev);
    prev = gap;
  }
  const double at5 = closed_form_S_A_first(5) - closed_form_S_A_second(5);
  const double at101 = closed_form_S_A_first(101) - closed_form_S_A_second(101);
  CHECK(at101 < at5);
}
