#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include <contests/contests.hpp>

#include "support/fuzz.hpp"

using namespace contests;

TEST_CASE("choice sets validate their segments") {
  CHECK_NOTHROW(ChoiceSet({{0.0, 0.0}, {0.6, 1.0}}));
  CHECK_THROWS_AS(ChoiceSet(std::vector<Segment>{}), std::invalid_argument);
  CHECK_THROWS_AS(ChoiceSet({{-0.1, 0.2}}), std::invalid_argument);
  CHECK_THROWS_AS(ChoiceSet({{0.3, 0.2}}), std::invalid_argument);
  CHECK_THROWS_AS(ChoiceSet({{0.0, 0.5}, {0.4, 0.8}}), std::invalid_argument);
  CHECK_THROWS_AS(ChoiceSet({{0.0, 0.5}, {0.5, 0.8}}), std::invalid_argument);
  CHECK_THROWS_AS(ChoiceSet({{0.6, 0.8}, {0.1, 0.2}}), std::invalid_argument);
  CHECK_THROWS_AS(ChoiceSet({{0.0, std::numeric_limits<double>::infinity()}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ChoiceSet({{std::numeric_limits<double>::quiet_NaN(), 1.0}}),
                  std::invalid_argument);
}

TEST_CASE("point sets expose membership and extremes") {
  const ChoiceSet s = ChoiceSet::points({0.1, 0.4, 0.9});
  CHECK(s.min() == 0.1);
  CHECK(s.max() == 0.9);
  CHECK(s.contains(0.4));
  CHECK_FALSE(s.contains(0.25));
  CHECK(s.all_points());
  CHECK(s.as_points() == std::vector<double>{0.1, 0.4, 0.9});

  const ChoiceSet mixed({{0.0, 0.0}, {0.6, 1.0}});
  CHECK(mixed.contains(0.0));
  CHECK(mixed.contains(0.6));
  CHECK(mixed.contains(0.73));
  CHECK(mixed.contains(1.0));
  CHECK_FALSE(mixed.contains(0.3));
  CHECK_FALSE(mixed.all_points());
  CHECK_THROWS_AS(mixed.as_points(), std::invalid_argument);
}

TEST_CASE("bracketing picks the nearest feasible efforts around a target") {
  const ChoiceSet example({{0.0, 0.0}, {0.6, 1.0}});
  const Bracket b = bracket_around(example, 0.25);
  CHECK(b.kind == BracketKind::Straddling);
  CHECK(b.lower == 0.0);
  CHECK(b.upper == 0.6);
  CHECK_FALSE(b.interior());

  const Bracket inside = bracket_around(ChoiceSet({{0.0, 1.0}}), 0.25);
  CHECK(inside.kind == BracketKind::Interior);
  CHECK(inside.lower == 0.25);
  CHECK(inside.upper == 0.25);

  const Bracket two_points = bracket_around(ChoiceSet::points({0.05, 0.4}), 0.25);
  CHECK(two_points.kind == BracketKind::Straddling);
  CHECK(two_points.lower == 0.05);
  CHECK(two_points.upper == 0.4);

  const Bracket at_edge = bracket_around(ChoiceSet({{0.25, 0.3}}), 0.25);
  CHECK(at_edge.kind == BracketKind::Interior);

  const Bracket below = bracket_around(ChoiceSet::points({0.1, 0.2}), 0.25);
  CHECK(below.kind == BracketKind::AllBelow);
  CHECK(below.lower == 0.2);
  CHECK(below.upper == 0.2);

  const Bracket above = bracket_around(ChoiceSet::points({0.3, 0.4}), 0.25);
  CHECK(above.kind == BracketKind::AllAbove);
  CHECK(above.lower == 0.3);
  CHECK(above.upper == 0.3);
}

TEST_CASE("no feasible effort lies strictly inside a straddling bracket") {
  Rng rng(21);
  for (int k = 0; k < 30; ++k) {
    const ContestSpec spec = testsupport::random_symmetric_spec(rng);
    const double e_star = unconstrained_equilibrium(spec.v1, spec.impact);
    const Bracket b = bracket_around(*spec.choice_set, e_star);
    if (b.kind == BracketKind::Interior) {
      CHECK(spec.choice_set->contains(e_star));
      continue;
    }
    if (b.kind == BracketKind::Straddling) {
      CHECK(b.lower <= e_star);
      CHECK(e_star <= b.upper);
      for (const Segment& seg : spec.choice_set->segments()) {
        const bool outside = seg.hi <= b.lower || seg.lo >= b.upper;
        CHECK(outside);
      }
    } else {
      CHECK(b.lower == b.upper);
      CHECK(spec.choice_set->contains(b.lower));
    }
  }
}
