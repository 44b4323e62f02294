#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgcalc/matrix.hpp"

using namespace dgcalc;

namespace {
/* Small deterministic LCG so property sweeps are reproducible. */
struct Lcg {
  std::uint64_t s;
  std::uint64_t next() { return s = s * 6364136223846793005ULL + 1442695040888963407ULL; }
  long small(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
};

Matrix random_matrix(Field f, std::size_t r, std::size_t c, Lcg& g) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::from_int(f, g.small(-6, 6));
  return m;
}
} // namespace

TEST_CASE("scalar arithmetic over Q stays exact and canonical") {
  Field q = Field::rationals();
  Scalar a = Scalar::from_ratio(q, 1, 3), b = Scalar::from_ratio(q, 2, 5);
  CHECK((a * b).str() == "2/15");
  CHECK((a + b).str() == "11/15");
  CHECK((a - a).is_zero());
  CHECK((a / b).str() == "5/6");
  CHECK(Scalar::parse(q, "-4/6").str() == "-2/3");
}

TEST_CASE("scalar arithmetic over F_p") {
  Field f5 = Field::prime(5);
  Scalar a = Scalar::from_int(f5, 3), b = Scalar::from_int(f5, 4);
  CHECK((a + b).str() == "2");
  CHECK((a * b).str() == "2");
  CHECK((-a).str() == "2");
  CHECK(a.inverse().str() == "2");
  CHECK(Scalar::parse(f5, "2/3").str() == "4");
  CHECK_THROWS_AS(Scalar::from_int(f5, 0).inverse(), StructuralError);
  CHECK_THROWS_AS(Field::prime(6), StructuralError);
}

TEST_CASE("mixed-field operations are rejected") {
  Scalar a = Scalar::one(Field::rationals());
  Scalar b = Scalar::one(Field::prime(5));
  CHECK_THROWS_AS(a + b, StructuralError);
  CHECK_THROWS_AS((void)(a == b), StructuralError);
}

TEST_CASE("solve_linear picks the first solution under the pivot order") {
  Field f2 = Field::prime(2);
  Matrix a(f2, 1, 2);
  a.at(0, 0) = Scalar::one(f2);
  a.at(0, 1) = Scalar::one(f2);
  auto x = solve_linear(a, {Scalar::zero(f2)});
  REQUIRE(x.has_value());
  CHECK(vec_is_zero(*x)); // free variable pinned to zero: (0,0), not (1,1)
}

TEST_CASE("solve_linear on the identity returns the rhs") {
  Field q = Field::rationals();
  Matrix id = Matrix::identity(q, 2);
  auto x = solve_linear(id, {Scalar::from_int(q, 3), Scalar::from_int(q, 5)});
  REQUIRE(x.has_value());
  CHECK((*x)[0].str() == "3");
  CHECK((*x)[1].str() == "5");
}

TEST_CASE("solve_linear reports inconsistency") {
  Field q = Field::rationals();
  Matrix a(q, 2, 1);
  a.at(0, 0) = Scalar::one(q);
  a.at(1, 0) = Scalar::one(q);
  auto x = solve_linear(a, {Scalar::one(q), Scalar::zero(q)});
  CHECK(!x.has_value());
}

TEST_CASE("rank respects the field") {
  Field q = Field::rationals();
  Matrix a(q, 2, 2);
  a.at(0, 0) = Scalar::from_int(q, 2);
  a.at(0, 1) = Scalar::from_int(q, 4);
  a.at(1, 0) = Scalar::from_int(q, 1);
  a.at(1, 1) = Scalar::from_int(q, 2);
  CHECK(rank(a) == 1);

  Field f2 = Field::prime(2);
  Matrix b(f2, 2, 2);
  b.at(0, 0) = Scalar::from_int(f2, 2); // == 0
  b.at(0, 1) = Scalar::from_int(f2, 4); // == 0
  b.at(1, 0) = Scalar::from_int(f2, 1);
  b.at(1, 1) = Scalar::from_int(f2, 2); // == 0
  CHECK(rank(b) == 1);
}

TEST_CASE("fraction-heavy elimination stays exact") {
  /* Hilbert-like system: notorious for float error, trivial for exact rationals. */
  Field q = Field::rationals();
  const std::size_t n = 6;
  Matrix h(q, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h.at(i, j) = Scalar::from_ratio(q, 1, static_cast<long>(i + j + 1));
  CHECK(rank(h) == n);
  Vec b = vec_zero(q, n);
  for (std::size_t i = 0; i < n; ++i) b[i] = Scalar::one(q);
  auto x = solve_linear(h, b);
  REQUIRE(x.has_value());
  CHECK(vec_eq(h.apply(*x), b)); // residual is exactly zero
}

TEST_CASE("rref output is canonical and idempotent") {
  Lcg g{12345};
  for (Field f : {Field::rationals(), Field::prime(5)}) {
    for (int trial = 0; trial < 10; ++trial) {
      Matrix a = random_matrix(f, 4, 6, g);
      Rref r = rref(a);
      Rref rr = rref(r.m);
      CHECK(rr.m == r.m);
      CHECK(rr.pivots == r.pivots);
      CHECK(rank(a) == rank(a.transposed()));
    }
  }
}

TEST_CASE("nullspace vectors solve the homogeneous system") {
  Lcg g{999};
  for (Field f : {Field::rationals(), Field::prime(3)}) {
    for (int trial = 0; trial < 10; ++trial) {
      Matrix a = random_matrix(f, 3, 5, g);
      auto ns = nullspace(a);
      CHECK(ns.size() == a.cols() - rank(a));
      for (const auto& v : ns) CHECK(vec_is_zero(a.apply(v)));
    }
  }
}

TEST_CASE("solutions verify against the original system") {
  Lcg g{777};
  Field f = Field::rationals();
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a = random_matrix(f, 4, 4, g);
    Vec want = vec_zero(f, 4);
    for (auto& w : want) w = Scalar::from_int(f, g.small(-5, 5));
    Vec b = a.apply(want);
    auto x = solve_linear(a, b);
    REQUIRE(x.has_value());
    CHECK(vec_eq(a.apply(*x), b));
  }
}

TEST_CASE("subquotient basis picks earliest independent generators") {
  Field q = Field::rationals();
  Vec e0 = {Scalar::one(q), Scalar::zero(q), Scalar::zero(q)};
  Vec e1 = {Scalar::zero(q), Scalar::one(q), Scalar::zero(q)};
  Vec e2 = {Scalar::zero(q), Scalar::zero(q), Scalar::one(q)};
  /* sub = span(e0); gens = {e0+e1, e1}: the two generator classes coincide. */
  SubquotientBasis b(q, 3, {e0}, {vec_add(e0, e1), e1});
  CHECK(b.dim() == 1);
  REQUIRE(b.chosen().size() == 1);
  CHECK(b.chosen()[0] == 0);
  Vec c = b.coords(e1); // e1 == (e0+e1) - e0: class equals the chosen generator
  CHECK(c[0].is_one());
  CHECK_THROWS_AS(b.coords(e2), PreconditionError); // e2 is outside span(sub)+span(gens)
}
