#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgcalc/complex.hpp"

using namespace dgcalc;

namespace {
CochainComplex one_dim_in_degree_zero(Field f, Window w) {
  GradedSpace g(f, w);
  g.set_basis(0, {"e"});
  return CochainComplex(std::move(g));
}
} // namespace

TEST_CASE("window errors are loud") {
  GradedSpace g(Field::rationals(), {-2, 1});
  CHECK_THROWS_AS(g.dim(2), WindowError);
  CHECK_THROWS_AS(g.set_basis(-3, {"x"}), WindowError);
  CHECK(g.dim(-1) == 0); // inside the window, simply empty
}

TEST_CASE("one-dimensional space in degree zero has H^0 = k") {
  CochainComplex c = one_dim_in_degree_zero(Field::rationals(), {-1, 1});
  CHECK(c.check_d_squared().empty());
  auto h0 = c.cohomology(0);
  CHECK(h0.dim == 1);
  REQUIRE(h0.representatives.size() == 1);
  CHECK(h0.representatives[0][0].is_one());
  CHECK(c.euler_characteristic() == 1);
}

TEST_CASE("acyclic two-term complex") {
  GradedSpace g(Field::rationals(), {-2, 1});
  g.set_basis(-1, {"c"});
  g.set_basis(0, {"e"});
  CochainComplex c(std::move(g));
  Matrix d(Field::rationals(), 1, 1);
  d.at(0, 0) = Scalar::one(Field::rationals());
  c.set_diff(-1, d); // d(c) = e
  CHECK(c.check_d_squared().empty());
  CHECK(c.cohomology(0).dim == 0);
  CHECK(c.cohomology(-1).dim == 0);
  CHECK(c.euler_characteristic() == 0);
}

TEST_CASE("cohomology needs both neighbors inside the window") {
  CochainComplex c = one_dim_in_degree_zero(Field::rationals(), {0, 1});
  CHECK_THROWS_AS(c.cohomology(0), WindowError); // degree -1 missing
}

TEST_CASE("cohomology refuses a non-complex") {
  GradedSpace g(Field::rationals(), {-1, 1});
  g.set_basis(-1, {"a"});
  g.set_basis(0, {"b"});
  g.set_basis(1, {"c"});
  CochainComplex c(std::move(g));
  Matrix d0(Field::rationals(), 1, 1), d1(Field::rationals(), 1, 1);
  d0.at(0, 0) = Scalar::one(Field::rationals());
  d1.at(0, 0) = Scalar::one(Field::rationals());
  c.set_diff(-1, d0);
  c.set_diff(0, d1); // d.d = 1 != 0
  CHECK(c.check_d_squared().size() == 1);
  CHECK_THROWS_AS(c.cohomology(0), PreconditionError);
}

TEST_CASE("representatives are cocycles and reduce canonically") {
  /* degrees -1,0,1: C^-1 = k^2 --d--> C^0 = k^2 --0--> 0, d = [[1,0],[0,0]].
   * H^0 is one-dimensional, spanned by the class of the second basis vector. */
  Field q = Field::rationals();
  GradedSpace g(q, {-2, 1});
  g.set_basis(-1, {"u", "v"});
  g.set_basis(0, {"x", "y"});
  CochainComplex c(std::move(g));
  Matrix d(q, 2, 2);
  d.at(0, 0) = Scalar::one(q);
  c.set_diff(-1, d);
  auto h = c.cohomology(0);
  CHECK(h.dim == 1);
  REQUIRE(h.representatives.size() == 1);
  CHECK(h.representatives[0][0].is_zero());
  CHECK(h.representatives[0][1].is_one());
  /* class coordinates kill coboundaries */
  auto basis = c.class_basis(0);
  Vec shifted = h.representatives[0];
  shifted[0] += Scalar::from_int(q, 7); // add d(7u)
  CHECK(vec_eq(basis.coords(shifted), basis.coords(h.representatives[0])));
}
