#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include <contests/contests.hpp>

#include "support/fuzz.hpp"

using namespace contests;

namespace {

ContestSpec sym(double v, ChoiceSet s, double r = 1.0) {
  return ContestSpec::symmetric(Valuation(v), ImpactFunction::scaled_power(r), std::move(s));
}

}  // namespace

TEST_CASE("discretization keeps endpoints exact and spacing within the step") {
  const Grid mixed = discretize(ChoiceSet({{0.0, 0.0}, {0.6, 1.0}}), 0.2);
  REQUIRE(mixed.points.size() == 4);
  CHECK(mixed.points[0] == 0.0);
  CHECK(mixed.points[1] == 0.6);
  CHECK(mixed.points[2] == Catch::Approx(0.8).margin(1e-15));
  CHECK(mixed.points[3] == 1.0);

  const Grid pts = discretize(ChoiceSet::points({0.1, 0.4}), 1e-3);
  CHECK(pts.points == std::vector<double>{0.1, 0.4});

  const Grid unit = discretize(ChoiceSet({{0.0, 1.0}}), 0.5);
  REQUIRE(unit.points.size() == 3);
  CHECK(unit.points[0] == 0.0);
  CHECK(unit.points[1] == 0.5);
  CHECK(unit.points[2] == 1.0);

  const Grid awkward = discretize(ChoiceSet({{0.1, 0.9999}}), 1e-3);
  CHECK(awkward.points.front() == 0.1);
  CHECK(awkward.points.back() == 0.9999);
  REQUIRE(awkward.points.size() == 901);
  for (std::size_t k = 1; k < awkward.points.size(); ++k) {
    CHECK(awkward.points[k] - awkward.points[k - 1] <= 1e-3 + 1e-12);
    CHECK(awkward.points[k] > awkward.points[k - 1]);
  }
}

TEST_CASE("discretization rejects unusable steps") {
  CHECK_THROWS_AS(discretize(ChoiceSet({{0.0, 1.0}}), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(discretize(ChoiceSet({{0.0, 1.0}}), -0.1), std::invalid_argument);
  CHECK_THROWS_AS(discretize(ChoiceSet({{0.0, 1.0}}),
                             std::numeric_limits<double>::quiet_NaN()),
                  std::invalid_argument);
  CHECK_THROWS_AS(discretize(ChoiceSet({{0.0, 1.0}}), 1e-9), std::invalid_argument);
}

TEST_CASE("brute force finds the lone equilibrium of the effortless contest") {
  const Grid grid = discretize(ChoiceSet({{0.0, 0.0}, {0.6, 1.0}}), 1e-3);
  const auto cells = epsilon_nash_enumerate(Valuation(1.0), Valuation(1.0),
                                            ImpactFunction::identity(), grid, grid, 2e-3);
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].e1 == 0.0);
  CHECK(cells[0].e2 == 0.0);
}

TEST_CASE("brute force with zero slack isolates the exact asymmetric equilibrium") {
  const Grid grid = Grid::from_points({0.18, 0.2, 5.0 / 9.0});
  const auto cells = epsilon_nash_enumerate(Valuation(1.0), Valuation(2.0),
                                            ImpactFunction::identity(), grid, grid, 0.0);
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].i == 0);
  CHECK(cells[0].j == 2);
  CHECK(cells[0].e1 == 0.18);
  CHECK(cells[0].e2 == 5.0 / 9.0);
}

TEST_CASE("tie-level enumeration is sharp where the relaxed set is a wide blob") {
  const Grid grid = discretize(ChoiceSet({{0.0, 1.0}}), 1e-3);
  const Valuation v(1.0);
  const ImpactFunction f = ImpactFunction::identity();

  const auto strict = epsilon_nash_enumerate(v, v, f, grid, grid, 1e-9);
  REQUIRE_FALSE(strict.empty());
  for (const GridCell& c : strict) {
    CHECK(std::abs(c.e1 - 0.25) <= 1e-3 + 1e-12);
    CHECK(std::abs(c.e2 - 0.25) <= 1e-3 + 1e-12);
  }

  const auto relaxed = epsilon_nash_enumerate(v, v, f, grid, grid, 2e-3);
  CHECK(relaxed.size() > strict.size());
  for (const GridCell& c : strict) {
    const bool present = std::any_of(relaxed.begin(), relaxed.end(), [&](const GridCell& r) {
      return r.i == c.i && r.j == c.j;
    });
    CHECK(present);
  }
  // A payoff this flat admits profiles far from the equilibrium: the
  // relaxed set legitimately reaches tens of grid steps out.
  const bool far = std::any_of(relaxed.begin(), relaxed.end(), [](const GridCell& r) {
    return std::abs(r.e1 - 0.25) >= 0.02;
  });
  CHECK(far);

  CHECK_THROWS_AS(epsilon_nash_enumerate(v, v, f, Grid{}, grid, 1e-3),
                  std::invalid_argument);
  CHECK_THROWS_AS(epsilon_nash_enumerate(v, v, f, grid, grid, -1.0), std::invalid_argument);
}

TEST_CASE("every classified golden contest survives brute-force verification") {
  const std::vector<ContestSpec> specs = {
      sym(1.0, ChoiceSet({{0.0, 1.0}})),
      sym(1.0, ChoiceSet({{0.0, 0.0}, {0.6, 1.0}})),
      sym(1.0, ChoiceSet({{0.0, 0.0}, {0.45, 1.0}})),
      sym(1.0, ChoiceSet::points({0.1, 0.4})),
      sym(1.0, ChoiceSet::points({0.15, 0.4})),
      sym(1.0, ChoiceSet::points({0.05, 0.4})),
      sym(1.0, ChoiceSet::points({0.05, 0.1})),
      sym(1.0, ChoiceSet({{0.3, 0.5}})),
  };
  for (const ContestSpec& spec : specs) {
    const EquilibriumReport report = classify(spec);
    const OracleVerdict verdict = verify_report(report, spec);
    INFO("case " << to_string(report.eq_case));
    CHECK(verdict.confirmed);
    CHECK(verdict.predicted_missing.empty());
    CHECK(verdict.extra_found.empty());
    CHECK(verdict.h == 1e-3);
    CHECK(verdict.eps == 2e-3);
    CHECK(verdict.delta == 2e-3);
  }
}

TEST_CASE("verification refutes a wrong prediction from both sides") {
  const ContestSpec spec = sym(1.0, ChoiceSet({{0.0, 0.0}, {0.6, 1.0}}));
  EquilibriumReport report = classify(spec);
  report.equilibria = {{0.2, 0.2}};
  const OracleVerdict verdict = verify_report(report, spec);
  CHECK_FALSE(verdict.confirmed);
  REQUIRE(verdict.predicted_missing.size() == 1);
  CHECK(verdict.predicted_missing[0] == EffortPair{0.2, 0.2});
  REQUIRE_FALSE(verdict.extra_found.empty());
  CHECK(verdict.extra_found[0] == EffortPair{0.0, 0.0});
}

TEST_CASE("verdicts are stable under grid refinement") {
  for (const ContestSpec& spec : {sym(1.0, ChoiceSet({{0.0, 0.0}, {0.6, 1.0}})),
                                  sym(1.0, ChoiceSet({{0.0, 1.0}}))}) {
    const EquilibriumReport report = classify(spec);
    CHECK(verify_report(report, spec, 2.5e-4, 2e-3).confirmed);
  }
}

TEST_CASE("finite-game predictions verify cell by cell") {
  const std::vector<double> efforts_a = {0.18, 0.2, 5.0 / 9.0};
  const Valuation v1(1.0);
  const Valuation v2(2.0);
  const ImpactFunction f = ImpactFunction::identity();

  const OracleVerdict right =
      verify_pure_cells({{0.18, 5.0 / 9.0}}, v1, v2, f, efforts_a, efforts_a);
  CHECK(right.confirmed);

  const std::vector<double> efforts_b = {1.0 / 9.0, 0.2, 2.0 / 3.0};
  const OracleVerdict none = verify_pure_cells({}, v1, v2, f, efforts_b, efforts_b);
  CHECK(none.confirmed);

  const OracleVerdict wrong =
      verify_pure_cells({{0.2, 0.2}}, v1, v2, f, efforts_a, efforts_a);
  CHECK_FALSE(wrong.confirmed);
  REQUIRE(wrong.predicted_missing.size() == 1);
  CHECK(wrong.predicted_missing[0] == EffortPair{0.2, 0.2});
  REQUIRE(wrong.extra_found.size() == 1);
  CHECK(wrong.extra_found[0].e1 == 0.18);
  CHECK(wrong.extra_found[0].e2 == 5.0 / 9.0);
}

TEST_CASE("random contests classify and verify in bulk") {
  Rng rng(91);
  for (int k = 0; k < 30; ++k) {
    const ContestSpec spec = testsupport::random_symmetric_spec(rng);
    const EquilibriumReport report = classify(spec);
    const OracleVerdict verdict = verify_report(report, spec);
    INFO("instance " << k << " case " << to_string(report.eq_case));
    CHECK(verdict.confirmed);
  }
}
