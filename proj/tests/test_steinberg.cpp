#include <random>

#include "doctest.h"
#include "gkd/fixtures.hpp"
#include "gkd/kernels.hpp"
#include "gkd/steinberg.hpp"
#include "support.hpp"

using namespace gkd;
using namespace gkd::test;

TEST_CASE("convolution on the pair groupoid multiplies matrix units") {
  for (std::size_t n = 1; n <= 3; ++n) {
    AlgebraPtr b = make_algebra(TwistedGroupoid::untwisted(pair_groupoid(n), Field::rationals()));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            AlgebraElement prod = b->delta(pair_arrow(n, i, j)) * b->delta(pair_arrow(n, k, l));
            AlgebraElement expect = j == k ? b->delta(pair_arrow(n, i, l)) : b->zero();
            CHECK(prod == expect);
          }
    CHECK(center(*b->presentation()).dim() == 1);
  }
}

TEST_CASE("convolution matches the defining sum") {
  const Field f = Field::prime(5);
  std::mt19937 rng(7);
  for (const auto& name : {"gbs", "v4q", "z2on3", "union"}) {
    AlgebraPtr b = make_algebra(fixture(name, f));
    const auto& g = b->groupoid();
    for (int trial = 0; trial < 10; ++trial) {
      Vector u = random_vector(f, b->dim(), rng), v = random_vector(f, b->dim(), rng);
      Vector expect = zero_vector(f, b->dim());
      for (Arrow a = 0; a < g.size(); ++a)
        for (Arrow c = 0; c < g.size(); ++c)
          if (g.composable(a, c)) expect[g.comp(a, c)] += b->twisted().omega(a, c) * u[a] * v[c];
      CHECK((b->from_vector(u) * b->from_vector(v)).to_vector() == expect);
      CHECK(b->presentation()->multiply(u, v) == expect);
    }
    CHECK(kernels::associativity_serial(*b->presentation()).defects == 0);
    CHECK((b->one() * b->delta(1)) == b->delta(1));
  }
}

TEST_CASE("quaternion relations in the twisted group algebra of V4") {
  const Field q = Field::rationals();
  AlgebraPtr b = make_algebra(fixture("v4q", q));
  AlgebraElement i = b->delta(1), j = b->delta(2), k = b->delta(3), one = b->one();
  CHECK(i * i == -q.one() * one);
  CHECK(j * j == -q.one() * one);
  CHECK(k * k == -q.one() * one);
  CHECK(i * j == k);
  CHECK(j * i == -q.one() * k);
  CHECK(center(*b->presentation()).dim() == 1);
  // The untwisted group algebra is commutative.
  AlgebraPtr v4 = make_algebra(fixture("v4", q));
  CHECK(center(*v4->presentation()).dim() == 4);
}

TEST_CASE("partial inverse of a section is an involution") {
  const Field f = Field::prime(7);
  std::mt19937 rng(1);
  AlgebraPtr b = make_algebra(fixture("gbs", f));
  const std::vector<Arrow> sections[] = {{3}, {2, 3}, {0, 1}, {1}};
  for (const auto& s : sections) {
    std::vector<Scalar> vals;
    for (std::size_t i = 0; i < s.size(); ++i) vals.push_back(random_nonzero(f, rng));
    AlgebraElement n = b->delta_section(s, vals);
    AlgebraElement ns = b->partial_inverse(n);
    CHECK(b->partial_inverse(ns) == n);
    CHECK(n * ns * n == n);
    CHECK(ns * n * ns == ns);
  }
  CHECK_THROWS_AS(b->delta_section({0, 3}, {f.one(), f.one()}), BisectionRequired);
  AlgebraPtr other = make_algebra(fixture("gb", f));
  CHECK_THROWS_AS(b->delta(0) * other->delta(0), ParentMismatch);
}

TEST_CASE("dedicated unit and unit functions") {
  const Field q = Field::rationals();
  AlgebraPtr b = make_algebra(fixture("pair3", q));
  AlgebraElement e = b->delta(pair_arrow(3, 0, 1)) + b->delta(pair_arrow(3, 2, 2));
  AlgebraElement u = b->dedicated_unit({e});
  CHECK(u * e == e);
  CHECK(e * u == e);
  CHECK(b->unit_subalgebra().dim() == 3);
  AlgebraElement a = b->embed_unit_function({{0, q.from_int(2)}, {1, q.from_int(5)}});
  CHECK(b->pairing(a, 1) == q.from_int(5));
}
