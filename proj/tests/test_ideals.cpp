#include <random>
#include <set>

#include "doctest.h"
#include "gkd/fixtures.hpp"
#include "gkd/ideals.hpp"
#include "support.hpp"

using namespace gkd;
using namespace gkd::test;

namespace {

// Two-sided ideals found by closing every subset of the vectors under
// multiplication by basis elements on both sides, as explicit vector sets.
std::size_t count_ideals_by_closure(const AlgebraPresentation& p) {
  const std::uint32_t q = p.field().characteristic();
  const std::size_t n = p.dim();
  auto close = [&](std::vector<Raw> gens) {
    while (true) {
      auto s = span_set(q, n, gens);
      std::vector<Raw> more;
      for (const auto& v : s)
        for (std::size_t i = 0; i < n; ++i) {
          Vector vv = cooked(p.field(), v), e = unit_vector(p.field(), n, i);
          for (const auto& w : {raw(p.multiply(e, vv)), raw(p.multiply(vv, e))})
            if (!s.count(w)) more.push_back(w);
        }
      if (more.empty()) return s;
      // Adding the products one at a time keeps the spanning set small.
      gens.push_back(more.front());
    }
  };
  std::set<std::set<Raw>> ideals{close({})};
  std::vector<std::set<Raw>> frontier(ideals.begin(), ideals.end());
  const auto vectors = all_vectors(q, n);
  while (!frontier.empty()) {
    auto s = frontier.back();
    frontier.pop_back();
    for (const auto& v : vectors) {
      if (s.count(v)) continue;
      std::vector<Raw> gens(s.begin(), s.end());
      gens.push_back(v);
      // Keep only a basis-sized generating set: the closure only needs v and
      // enough of s to span it.
      std::vector<Raw> small{v};
      std::set<Raw> reached = span_set(q, n, small);
      for (const auto& w : s)
        if (!reached.count(w)) {
          small.push_back(w);
          reached = span_set(q, n, small);
        }
      auto t = close(small);
      if (ideals.insert(t).second) frontier.push_back(t);
    }
  }
  return ideals.size();
}

Subspace invariant_closure(const Field& f, std::size_t n, std::vector<Vector> gens, const std::vector<Matrix>& mats) {
  Subspace s = span(f, n, gens);
  while (true) {
    std::vector<Vector> more = s.basis();
    for (const auto& m : mats)
      for (const auto& v : s.basis()) more.push_back(m.apply(v));
    Subspace t = span(f, n, more);
    if (t == s) return s;
    s = t;
  }
}

}  // namespace

TEST_CASE("ideal enumeration against closure of all subsets") {
  for (const auto& name : {"z2", "z3", "pair2", "gb", "swap"}) {
    AlgebraPtr b = make_algebra(fixture(name, Field::prime(2)));
    auto ideals = all_ideals(*b->presentation());
    CAPTURE(name);
    CHECK(ideals.size() == count_ideals_by_closure(*b->presentation()));
    for (const auto& i : ideals) CHECK(is_two_sided(*b->presentation(), i));
  }
}

TEST_CASE("maximal ideals and primitive witnesses") {
  AlgebraPtr b = make_algebra(fixture("pair3", Field::prime(2)));
  auto ideals = all_ideals(*b->presentation());
  CHECK(ideals.size() == 2);
  auto maxes = maximal_ideals(ideals);
  REQUIRE(maxes.size() == 1);
  CHECK(maxes[0].dim() == 0);

  AlgebraPtr gb = make_algebra(fixture("gb", Field::prime(3)));
  auto gi = all_ideals(*gb->presentation());
  CHECK(gi.size() == 16);
  auto gm = maximal_ideals(gi);
  CHECK(gm.size() == 4);
  for (const auto& m : gm) {
    auto w = primitive_witness(*gb, m);
    REQUIRE(w);
    CHECK(annihilator(*w) == m);
    CHECK(is_irreducible(*w).irreducible());
  }
  // A non-maximal ideal of a commutative semisimple algebra is not primitive.
  CHECK(!primitive_witness(*gb, Subspace(gb->field(), gb->dim())));
}

TEST_CASE("induced ideals at the extremes") {
  const Field q = Field::rationals();
  AlgebraPtr b = make_algebra(fixture("pair2", q));
  for (Arrow x : b->groupoid().units()) {
    IsotropyData xx = IsotropyData::build(b, x, x);
    CHECK(induced_ideal(xx, Subspace::full(q, xx.dim())) == Subspace::full(q, b->dim()));
    CHECK(induced_ideal(xx, Subspace(q, xx.dim())).dim() == 0);
  }
  AlgebraPtr u = make_algebra(fixture("union", q));
  // Inducing 0 from the Z2 component kills exactly the pair2 block.
  for (Arrow x : u->groupoid().units()) {
    IsotropyData xx = IsotropyData::build(u, x, x);
    CHECK(induced_ideal(xx, Subspace(q, xx.dim())).dim() == u->dim() - u->groupoid().orbit(x).size() *
                                                                         u->groupoid().orbit(x).size() * xx.dim());
  }
}

TEST_CASE("primitive ideals from isotropy need an exact verdict") {
  const Field q = Field::rationals();
  AlgebraPtr b = make_algebra(fixture("z2", q));
  IsotropyData xx = IsotropyData::build(b, 0, 0);
  CHECK_THROWS_AS(primitive_from_isotropy(xx, regular_module(xx.algebra_structure())), IdealError);
  const Field f = Field::prime(3);
  AlgebraPtr b3 = make_algebra(fixture("z2on3", f));
  for (Arrow x : b3->groupoid().units()) {
    IsotropyData x3 = IsotropyData::build(b3, x, x);
    auto v = is_irreducible(regular_module(x3.algebra_structure()));
    if (v.irreducible()) {
      CHECK(primitive_from_isotropy(x3, regular_module(x3.algebra_structure())) ==
            induced_ideal(x3, Subspace(f, x3.dim())));
    }
  }
}

TEST_CASE("two-sided criterion on random fibers") {
  const Field f = Field::prime(3);
  std::mt19937 rng(41);
  for (const auto& name : {"gb", "z2on3", "pair2", "union"}) {
    AlgebraPtr b = make_algebra(fixture(name, f));
    FdModule v = direct_sum(regular_module(b->presentation()), quotient_by_ideal(*b, Subspace(f, b->dim())));
    for (int trial = 0; trial < 20; ++trial) {
      const auto& units = b->groupoid().units();
      Arrow x = units[trial % units.size()];
      IsotropyData xx = IsotropyData::build(b, x, x);
      GermSpace gx = germ_space(v, *b, x);
      std::vector<Matrix> cmats;
      for (const auto& c : xx.C().basis()) cmats.push_back(v.rho(c));
      std::vector<Vector> gens = gx.jv.basis();
      gens.push_back(random_vector(f, v.dim(), rng, 0, 2));
      Subspace w = invariant_closure(f, v.dim(), gens, cmats);
      FdModule ind = induce(ImprimitivityBimodule::build(xx), fiber_quotient(v, xx, w));
      Vector bb = random_vector(f, b->dim(), rng, 0, 2);
      // Direct check of d b V <= W over the arrow basis d.
      bool into = true;
      for (Arrow d = 0; d < b->dim(); ++d) {
        Matrix m = v.rho(b->presentation()->multiply(unit_vector(f, b->dim(), d), bb));
        for (std::size_t j = 0; j < v.dim(); ++j) into = into && w.contains(m.column(j));
      }
      CHECK(ind.rho(bb).is_zero() == into);
      CHECK(multiplies_into(v, w, bb) == into);
    }
  }
}

TEST_CASE("germ decomposition and the Effros-Hahn check") {
  const Field f = Field::prime(2);
  for (const auto& name : {"gb", "z2on3", "union", "pair3", "swap"}) {
    AlgebraPtr b = make_algebra(fixture(name, f));
    CAPTURE(name);
    for (const auto& i : all_ideals(*b->presentation())) {
      if (i.dim() == b->dim()) continue;
      auto rep = effros_hahn_check(b, i);
      CHECK(rep.intersection_ok);
      CHECK(rep.decomposition.annihilator == i);
    }
    for (const auto& m : maximal_ideals(all_ideals(*b->presentation()))) {
      auto w = primitive_witness(*b, m);
      REQUIRE(w);
      auto rep = effros_hahn_check(b, m, &*w);
      CHECK(rep.ok());
      CHECK(rep.single_x.has_value());
      auto q = inducing_ideal_experiment(b, m, *w);
      CHECK(q.answer);
      CHECK(q.fiber_irreducible);
      CHECK(q.inducing_primitive);
      CHECK(q.induced_equals);
    }
  }
}
