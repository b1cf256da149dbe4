#include <set>

#include "doctest.h"
#include "gkd/fixtures.hpp"
#include "gkd/modrep.hpp"
#include "support.hpp"

using namespace gkd;
using namespace gkd::test;

namespace {

using RawSpace = std::set<Raw>;

Raw raw_apply(std::uint32_t p, const Matrix& m, const Raw& v) {
  Raw out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] = (out[i] + m(i, j).residue() * v[j]) % p;
  return out;
}

// Every subspace of GF(p)^n as an explicit set of vectors, grown one vector
// at a time from the zero space.
std::set<RawSpace> all_subspaces(std::uint32_t p, std::size_t n) {
  std::set<RawSpace> done;
  std::vector<RawSpace> todo{span_set(p, n, {})};
  const auto vectors = all_vectors(p, n);
  while (!todo.empty()) {
    RawSpace s = todo.back();
    todo.pop_back();
    if (!done.insert(s).second) continue;
    for (const auto& v : vectors) {
      if (s.count(v)) continue;
      std::vector<Raw> gens(s.begin(), s.end());
      gens.push_back(v);
      // span_set over all members is expensive; the members plus v suffice
      // when closed under addition with multiples of v.
      RawSpace t = s;
      for (const auto& w : s)
        for (std::uint32_t c = 1; c < p; ++c) {
          Raw u(n);
          for (std::size_t i = 0; i < n; ++i) u[i] = (w[i] + c * v[i]) % p;
          t.insert(u);
        }
      todo.push_back(t);
    }
  }
  return done;
}

std::size_t count_invariant(std::uint32_t p, std::size_t n, const std::vector<Matrix>& gens) {
  std::size_t count = 0;
  for (const auto& s : all_subspaces(p, n)) {
    bool inv = true;
    for (const auto& m : gens)
      for (const auto& v : s) inv = inv && s.count(raw_apply(p, m, v));
    count += inv;
  }
  return count;
}

FdModule trivial_module(const AlgebraPtr& b) {
  std::vector<Matrix> act;
  for (Arrow a = 0; a < b->dim(); ++a) {
    Matrix m(b->field(), 1, 1);
    m(0, 0) = b->field().one();
    act.push_back(m);
  }
  return FdModule(b->presentation(), 1, act);
}

FdModule column_module(const AlgebraPtr& b) {
  const Field& f = b->field();
  const std::size_t n = b->groupoid().units().size();
  std::vector<Matrix> act;
  for (Arrow a = 0; a < b->dim(); ++a) {
    Matrix m(f, n, n);
    m(b->groupoid().tgt(a), b->groupoid().src(a)) = f.one();
    act.push_back(m);
  }
  return FdModule(b->presentation(), n, act);
}

}  // namespace

TEST_CASE("submodules of K[Z2]") {
  AlgebraPtr b3 = make_algebra(fixture("z2", Field::prime(3)));
  CHECK(all_submodules(regular_module(b3->presentation())).size() == 4);
  AlgebraPtr b2 = make_algebra(fixture("z2", Field::prime(2)));
  CHECK(all_submodules(regular_module(b2->presentation())).size() == 3);

  AlgebraPtr bq = make_algebra(fixture("z2", Field::rationals()));
  FdModule reg = regular_module(bq->presentation());
  auto v = is_irreducible(reg);
  REQUIRE(v.reducible());
  REQUIRE(v.witness);
  CHECK(v.witness->dim() == 1);
  CHECK(is_submodule(reg, *v.witness));
  const Field q = Field::rationals();
  CHECK(is_submodule(reg, span(q, 2, {{q.one(), q.one()}})));
  CHECK(!is_submodule(reg, span(q, 2, {{q.one(), q.zero()}})));
}

TEST_CASE("invariant subspaces against enumeration of all subspaces") {
  for (const auto& [name, p] : std::vector<std::pair<std::string, std::uint32_t>>{
           {"z2", 2}, {"z3", 2}, {"z3", 3}, {"pair2", 2}, {"pair2", 3}, {"v4", 2}, {"swap", 2}, {"gb", 2}}) {
    AlgebraPtr b = make_algebra(fixture(name, Field::prime(p)));
    FdModule reg = regular_module(b->presentation());
    CAPTURE(name);
    CAPTURE(p);
    auto subs = all_submodules(reg);
    CHECK(subs.size() == count_invariant(p, reg.dim(), reg.action()));
    for (const auto& s : subs) CHECK(is_submodule(reg, s));
  }
}

TEST_CASE("irreducibility verdicts") {
  const Field q = Field::rationals();
  AlgebraPtr h = make_algebra(fixture("v4q", q));
  auto v = is_irreducible(regular_module(h->presentation()));
  CHECK(v.irreducible());
  CHECK(!v.exact);

  AlgebraPtr p2 = make_algebra(fixture("pair2", q));
  CHECK(is_irreducible(column_module(p2)).irreducible());
  CHECK(is_irreducible(regular_module(p2->presentation())).reducible());

  // Over GF(3) the quaternion algebra splits: the regular module is reducible.
  AlgebraPtr h3 = make_algebra(fixture("v4q", Field::prime(3)));
  auto v3 = is_irreducible(regular_module(h3->presentation()));
  CHECK(v3.reducible());
  CHECK(v3.exact);
}

TEST_CASE("annihilators") {
  const Field q = Field::rationals();
  AlgebraPtr b = make_algebra(fixture("z2", q));
  Subspace ann = annihilator(trivial_module(b));
  CHECK(ann == span(q, 2, {{q.one(), -q.one()}}));
  FdModule reg = regular_module(b->presentation());
  CHECK(annihilator(reg).dim() == 0);
  FdModule both = direct_sum(trivial_module(b), reg);
  CHECK(annihilator(both) == intersect(ann, annihilator(reg)));
  CHECK(!check_module(both));

  AlgebraPtr p2 = make_algebra(fixture("pair2", q));
  CHECK(annihilator(column_module(p2)).dim() == 0);
}

TEST_CASE("module axioms are checked") {
  const Field q = Field::rationals();
  AlgebraPtr b = make_algebra(fixture("z2", q));
  std::vector<Matrix> act{Matrix::identity(q, 1), Matrix::identity(q, 1)};
  act[1](0, 0) = q.from_int(2);  // g acts by 2, but g^2 = e
  auto v = check_module(FdModule(b->presentation(), 1, act));
  REQUIRE(v);
  CHECK(v->kind == "structure constants");
  std::vector<Matrix> zero{Matrix(q, 1, 1), Matrix(q, 1, 1)};
  v = check_module(FdModule(b->presentation(), 1, zero));
  REQUIRE(v);
  CHECK(v->kind == "unitality");
}

TEST_CASE("module maps") {
  const Field f = Field::prime(3);
  AlgebraPtr b = make_algebra(fixture("z3", f));
  FdModule reg = regular_module(b->presentation());
  // End of the regular module of a commutative algebra is the algebra.
  CHECK(hom_space(reg, reg).dim() == 3);
  AlgebraPtr p2 = make_algebra(fixture("pair2", f));
  FdModule col = column_module(p2);
  CHECK(hom_space(col, col).dim() == 1);
  CHECK(hom_space(col, regular_module(p2->presentation())).dim() == 2);
}

TEST_CASE("restriction and germs of the column module") {
  const Field q = Field::rationals();
  AlgebraPtr b = make_algebra(fixture("pair2", q));
  FdModule col = column_module(b);
  for (Arrow x : b->groupoid().units()) {
    IsotropyData xx = IsotropyData::build(b, x, x);
    Restriction r = restriction(col, xx);
    CHECK(r.carrier.dim() == 1);
    CHECK(r.carrier.contains(unit_vector(q, 2, x)));
    CHECK(!check_module(r.module));
    GermSpace g = germ_space(col, *b, x);
    CHECK(g.dim() == 1);
    CHECK(g.jv == span(q, 2, {unit_vector(q, 2, 1 - x)}));
    CHECK(germ_module(col, xx, g).dim() == 1);
  }
  IsotropyData yx = IsotropyData::build(b, 1, 0);
  GermSpace g0 = germ_space(col, *b, 0), g1 = germ_space(col, *b, 1);
  CHECK(disintegration_well_defined(col, yx, g0, g1));
  Vector out = disintegration_action(col, yx, g0, g1, unit_vector(q, 1, 0), germ_of(g0, unit_vector(q, 2, 0)));
  CHECK(out == germ_of(g1, unit_vector(q, 2, 1)));
}

TEST_CASE("submodule and quotient coordinates") {
  const Field f = Field::prime(2);
  AlgebraPtr b = make_algebra(fixture("z2", f));
  FdModule reg = regular_module(b->presentation());
  Subspace line = span(f, 2, {{f.one(), f.one()}});
  FdModule s = submodule(reg, line), qm = quotient_module(reg, line);
  CHECK(s.dim() == 1);
  CHECK(qm.dim() == 1);
  CHECK(!check_module(s));
  CHECK(!check_module(qm));
  CHECK(generated_submodule(reg, {unit_vector(f, 2, 0)}).dim() == 2);
  CHECK_THROWS_AS(all_invariant_subspaces(f, 30, reg.action(), 1024), BudgetExceeded);
}
