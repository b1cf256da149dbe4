#include <random>

#include "doctest.h"
#include "gkd/fixtures.hpp"
#include "gkd/twist.hpp"
#include "support.hpp"

using namespace gkd;
using namespace gkd::test;

namespace {

std::vector<Scalar> random_cochain(const FiniteGroupoid& g, const Field& f, std::mt19937& rng) {
  std::vector<Scalar> b;
  for (Arrow a = 0; a < g.size(); ++a) b.push_back(g.is_unit(a) ? f.one() : random_nonzero(f, rng));
  return b;
}

// The cocycle identity and normalization checked directly from the definition.
bool satisfies_cocycle_identity(const FiniteGroupoid& g, const Cocycle& c) {
  for (Arrow a = 0; a < g.size(); ++a)
    for (Arrow b = 0; b < g.size(); ++b) {
      if (!g.composable(a, b)) continue;
      if ((g.is_unit(a) || g.is_unit(b)) && !c.value(a, b).is_one()) return false;
      for (Arrow d = 0; d < g.size(); ++d) {
        if (!g.composable(b, d)) continue;
        if (c.value(a, b) * c.value(g.comp(a, b), d) != c.value(a, g.comp(b, d)) * c.value(b, d)) return false;
      }
    }
  return true;
}

}  // namespace

TEST_CASE("random coboundaries over GF(5) are cocycles") {
  const Field f = Field::prime(5);
  std::mt19937 rng(2024);
  int checked = 0;
  for (const auto& name : fixture_names()) {
    const FiniteGroupoid g = fixture(name, f).groupoid();
    for (int k = 0; k < 15; ++k, ++checked) {
      Cocycle c = coboundary(g, random_cochain(g, f, rng));
      CHECK(satisfies_cocycle_identity(g, c));
      CHECK(!validate_cocycle(g, c));
    }
  }
  CHECK(checked >= 200);
}

TEST_CASE("coboundary requires value 1 on units") {
  const Field f = Field::prime(5);
  FiniteGroupoid g = pair_groupoid(2);
  std::vector<Scalar> b(g.size(), f.one());
  b[0] = f.from_int(2);
  CHECK_THROWS_AS(coboundary(g, b), CocycleError);
}

TEST_CASE("quaternion cocycle") {
  const Field q = Field::rationals();
  FiniteGroupoid v4 = group_groupoid(klein_four());
  Cocycle c = quaternion_cocycle(v4, q);
  CHECK(satisfies_cocycle_identity(v4, c));
  // i^2 = j^2 = k^2 = -1 in the lift e, a, b, ab -> 1, i, j, k.
  for (Arrow a = 1; a < 4; ++a) CHECK(c.value(a, a) == -q.one());
  TwistedGroupoid tg = TwistedGroupoid::make(v4, c);
  CHECK(tg.omega(1, 2) == -tg.omega(2, 1));
}

TEST_CASE("bad cocycles are rejected") {
  const Field f = Field::prime(3);
  FiniteGroupoid g = pair_groupoid(2);
  Cocycle zero(f);
  CHECK_THROWS_AS(zero.set(2, 3, f.zero()), ZeroCocycleValue);

  Cocycle unnormalized(f);
  unnormalized.set(0, 0, f.from_int(2));
  auto v = validate_cocycle(g, unnormalized);
  REQUIRE(v);
  CHECK(v->condition == "normalization");

  // omega(a,b) = 2 for a single composable pair of non-units breaks the identity.
  Cocycle broken(f);
  broken.set(pair_arrow(2, 0, 1), pair_arrow(2, 1, 0), f.from_int(2));
  v = validate_cocycle(g, broken);
  REQUIRE(v);
  CHECK(v->condition == "cocycle identity");
  CHECK_THROWS_AS(TwistedGroupoid::make(g, broken), CocycleError);

  Cocycle off_domain(f);
  off_domain.set(pair_arrow(2, 0, 1), pair_arrow(2, 0, 1), f.from_int(2));
  CHECK_THROWS_AS(validate_cocycle(g, off_domain), CocycleDomainError);
}

TEST_CASE("bundle inverse is involutive") {
  const Field f = Field::prime(5);
  std::mt19937 rng(9);
  for (const auto& name : {"gbs", "v4q", "z2on3", "pair3"}) {
    TwistedGroupoid base = fixture(name, f);
    const FiniteGroupoid& g = base.groupoid();
    Cocycle c = coboundary(g, random_cochain(g, f, rng));
    // Multiply the fixture's own cocycle by the coboundary.
    Cocycle prod(f);
    for (Arrow a = 0; a < g.size(); ++a)
      for (Arrow b = 0; b < g.size(); ++b)
        if (g.composable(a, b)) prod.set(a, b, base.omega(a, b) * c.value(a, b));
    TwistedGroupoid tg = TwistedGroupoid::make(g, prod);
    for (Arrow a = 0; a < g.size(); ++a) {
      Scalar t = random_nonzero(f, rng);
      Scalar s = bundle_inverse_coefficient(tg, a, t);
      CHECK(s * t * tg.omega(g.inv(a), a) == f.one());
      CHECK(bundle_inverse_coefficient(tg, g.inv(a), s) == t);
    }
  }
}

TEST_CASE("restriction to isotropy") {
  const Field q = Field::rationals();
  TwistedGroupoid tg = fixture("gbs", q);
  for (Arrow x : tg.groupoid().units()) {
    IsotropyTwist it = restrict_to_isotropy(tg, x);
    CHECK(it.arrows.size() == it.group.groupoid().size());
    for (Arrow i = 0; i < it.arrows.size(); ++i)
      for (Arrow j = 0; j < it.arrows.size(); ++j) {
        Arrow ij = it.group.groupoid().comp(i, j);
        CHECK(tg.groupoid().comp(it.arrows[i], it.arrows[j]) == it.arrows[ij]);
        CHECK(it.group.omega(i, j) == tg.omega(it.arrows[i], it.arrows[j]));
      }
  }
}
