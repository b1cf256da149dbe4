#include <map>

#include "doctest.h"
#include "gkd/fixtures.hpp"
#include "gkd/groupoid.hpp"

using namespace gkd;

namespace {

// Sum over orbits of |O|^2 |G(x,x)|, from the source/range maps alone.
std::size_t arrows_from_orbits(const FiniteGroupoid& g) {
  std::size_t total = 0;
  for (const auto& orbit : g.orbits()) {
    std::size_t iso = 0;
    for (Arrow a = 0; a < g.size(); ++a) iso += g.src(a) == orbit[0] && g.tgt(a) == orbit[0];
    total += orbit.size() * orbit.size() * iso;
  }
  return total;
}

}  // namespace

TEST_CASE("arrow counts of every fixture") {
  for (const auto& name : fixture_names()) {
    const FiniteGroupoid g = fixture(name, Field::rationals()).groupoid();
    CAPTURE(name);
    CHECK(arrows_from_orbits(g) == g.size());
    CHECK(!validate(g.tables()));
  }
  CHECK(fixture("z2on3", Field::rationals()).groupoid().size() == 6);
  CHECK(fixture("union", Field::rationals()).groupoid().size() == 6);
  CHECK_THROWS_AS(fixture("nope", Field::rationals()), std::invalid_argument);
}

TEST_CASE("pair groupoid labeling") {
  for (std::size_t n = 1; n <= 4; ++n) {
    FiniteGroupoid g = pair_groupoid(n);
    REQUIRE(g.size() == n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Arrow a = pair_arrow(n, i, j);
        Arrow expect = i == j ? i : n + i * (n - 1) + (j < i ? j : j - 1);
        CHECK(a == expect);
        CHECK(g.tgt(a) == i);
        CHECK(g.src(a) == j);
        CHECK(g.inv(a) == pair_arrow(n, j, i));
        for (std::size_t k = 0; k < n; ++k) CHECK(g.comp(a, pair_arrow(n, j, k)) == pair_arrow(n, i, k));
      }
  }
}

TEST_CASE("each axiom is detected after a targeted corruption") {
  const GroupoidTables good = pair_groupoid(3).tables();
  const Arrow a01 = pair_arrow(3, 0, 1), a10 = pair_arrow(3, 1, 0), a12 = pair_arrow(3, 1, 2);

  auto t = good;
  t.src[a01] = a12;
  CHECK(validate(t)->axiom == "unit");

  t = good;
  t.at(a01, a01) = 0;
  CHECK(validate(t)->axiom == "composability");

  t = good;
  t.at(a01, a10) = 1;
  CHECK(validate(t)->axiom == "composability");

  // Swap the images of two arrows under r(g) g in a one-object groupoid.
  auto z3 = group_groupoid(cyclic_group(3)).tables();
  z3.at(0, 1) = 2;
  z3.at(0, 2) = 1;
  CHECK(validate(z3)->axiom == "identity");

  t = good;
  t.inv[a01] = a12;
  CHECK(validate(t)->axiom == "involution");

  // A non-associative loop: keep units and inverses, break the table.
  auto z4 = group_groupoid(cyclic_group(4)).tables();
  std::swap(z4.at(1, 1), z4.at(1, 2));
  std::swap(z4.at(2, 1), z4.at(2, 2));
  std::swap(z4.at(3, 1), z4.at(3, 2));
  auto v = validate(z4);
  REQUIRE(v);
  CHECK((v->axiom == "associativity" || v->axiom == "involution"));

  t = good;
  t.src.pop_back();
  CHECK_THROWS_AS(validate(t), MalformedTable);
  CHECK_THROWS_AS(FiniteGroupoid::make(z3), GroupoidError);
}

TEST_CASE("isotropy groups, orbits and hom sets") {
  FiniteGroupoid g = fixture("z2on3", Field::rationals()).groupoid();
  std::map<std::size_t, std::size_t> by_size;
  for (const auto& o : g.orbits()) ++by_size[o.size()];
  CHECK(by_size[2] == 1);
  CHECK(by_size[1] == 1);
  for (Arrow x : g.units()) {
    auto iso = g.isotropy_group(x);
    CHECK(iso.arrows[0] == x);
    CHECK(iso.arrows.size() == (g.orbit(x).size() == 1 ? 2u : 1u));
    check_group(iso.table);
    for (Arrow y : g.units()) {
      auto hs = g.hom_set(y, x);
      bool same_orbit = false;
      for (Arrow z : g.orbit(x)) same_orbit = same_orbit || z == y;
      CHECK(hs.size() == (same_orbit ? iso.arrows.size() : 0u));
      for (Arrow a : hs) CHECK((g.src(a) == x && g.tgt(a) == y));
    }
  }
  CHECK_THROWS_AS(g.require_unit(g.size() - 1), NotAUnit);
}

TEST_CASE("bisections and their products") {
  FiniteGroupoid g = pair_groupoid(3);
  const std::vector<Arrow> s{pair_arrow(3, 0, 1), pair_arrow(3, 1, 2), pair_arrow(3, 2, 0)};
  const std::vector<Arrow> t{pair_arrow(3, 0, 0), pair_arrow(3, 2, 1)};
  CHECK(g.is_bisection(s));
  CHECK(g.is_bisection(t));
  CHECK(!g.is_bisection({pair_arrow(3, 0, 1), pair_arrow(3, 0, 2)}));
  CHECK(!g.is_bisection({pair_arrow(3, 1, 0), pair_arrow(3, 2, 0)}));
  std::vector<Arrow> st;
  for (Arrow a : s)
    for (Arrow b : t)
      if (g.composable(a, b)) st.push_back(g.comp(a, b));
  CHECK(g.is_bisection(st));
}
