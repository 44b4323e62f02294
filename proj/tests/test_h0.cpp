#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgcalc/h0.hpp"
#include "helpers.hpp"

using namespace dgcalc;
using namespace dgtest;

namespace {

const Field kQ = Field::rationals();
const Window kW{-1, 1};

bool detail_mentions(const EquivalenceVerdict& v, const std::string& needle) {
  return v.detail.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("trilean labels") {
  CHECK(trilean_str(Trilean::Yes) == "yes");
  CHECK(trilean_str(Trilean::No) == "no");
  CHECK(trilean_str(Trilean::Inconclusive) == "inconclusive");
}

TEST_CASE("h0 snapshot counts classes per hom pair") {
  H0Category g = h0(ground(kQ, kW));
  REQUIRE(g.objects == std::vector<std::string>{"X"});
  CHECK(g.dim(0, 0) == 1);

  CHECK(h0(square_zero(kQ, kW)).dim(0, 0) == 2);
  CHECK(h0(acyclic_endo(kQ, kW)).dim(0, 0) == 0);

  H0Category a = h0(arrow_cat(kQ, kW));
  CHECK(a.dim(0, 1) == 1);
  CHECK(a.dim(1, 0) == 0); // empty hom pair: absent from the table
}

TEST_CASE("h0 and friends need room around degree zero") {
  DGCategoryTab t = ground(kQ, Window{0, 1});
  CHECK_THROWS_AS(h0(t), WindowError);
  CHECK_THROWS_AS(contraction(t, 0), WindowError);
  CHECK_THROWS_AS(is_homotopy_equivalent(t, 0, 0), WindowError);
}

TEST_CASE("contraction witnesses") {
  DGCategoryTab ac = acyclic_endo(kQ, kW);
  auto w = contraction(ac, 0);
  REQUIRE(w.has_value());
  CHECK(morphism_eq(ac.differential(*w), ac.identity(0)));
  CHECK(is_contractible(ac, 0));

  CHECK(!contraction(ground(kQ, kW), 0).has_value());
  CHECK(!contraction(square_zero(kQ, kW), 0).has_value());

  DGCategoryTab z = zero_cat(kQ, kW);
  auto wz = contraction(z, 0);
  REQUIRE(wz.has_value());
  CHECK(wz->coords.empty()); // every hom space vanishes, so the witness is empty
}

TEST_CASE("invertibility in degree-0 cohomology") {
  DGCategoryTab sq = square_zero(kQ, kW);
  const Morphism id = sq.identity(0);
  const Morphism eps = sq.presentation()->gen_values.at("eps");

  CHECK(is_invertible_h0(sq, id));
  CHECK(is_invertible_h0(sq, morphism_scale(Scalar::from_int(kQ, 2), id)));
  CHECK(is_invertible_h0(sq, morphism_add(id, eps))); // inverse id - eps
  CHECK(!is_invertible_h0(sq, eps));
  CHECK(!is_invertible_h0(sq, sq.zero_morphism(0, 0, 0)));

  const Field f3 = Field::prime(3);
  DGCategoryTab sq3 = square_zero(f3, kW);
  CHECK(is_invertible_h0(sq3, morphism_add(sq3.identity(0), sq3.presentation()->gen_values.at("eps"))));
  CHECK(!is_invertible_h0(sq3, sq3.presentation()->gen_values.at("eps")));
}

TEST_CASE("zero morphism between contractible objects is invertible") {
  DGCategoryTab du = disjoint_union(acyclic_endo(kQ, kW), acyclic_endo(kQ, kW));
  CHECK(is_invertible_h0(du, du.zero_morphism(0, 1, 0)));
}

TEST_CASE("invertibility preconditions") {
  DGCategoryTab ac = acyclic_endo(kQ, kW);
  CHECK_THROWS_AS(is_invertible_h0(ac, ac.presentation()->gen_values.at("c")), PreconditionError);

  DGCategoryTab nt = nontrivial_differential(kQ, kW);
  CHECK_THROWS_AS(is_invertible_h0(nt, nt.presentation()->gen_values.at("m")), PreconditionError);
}

TEST_CASE("homotopy equivalence: identical and contractible objects") {
  DGCategoryTab g = ground(kQ, kW);
  EquivalenceVerdict same = is_homotopy_equivalent(g, 0, 0);
  CHECK(same.verdict == Trilean::Yes);
  REQUIRE(same.witness.has_value());
  CHECK(morphism_eq(*same.witness, g.identity(0)));

  DGCategoryTab du = disjoint_union(acyclic_endo(kQ, kW), acyclic_endo(kQ, kW));
  EquivalenceVerdict both = is_homotopy_equivalent(du, 0, 1);
  CHECK(both.verdict == Trilean::Yes);
  REQUIRE(both.witness.has_value());
  CHECK(morphism_is_zero(*both.witness));
}

TEST_CASE("homotopy equivalence: exact negatives") {
  DGCategoryTab gg = disjoint_union(ground(kQ, kW), ground(kQ, kW));
  CHECK(is_homotopy_equivalent(gg, 0, 1).verdict == Trilean::No);

  DGCategoryTab ag = disjoint_union(acyclic_endo(kQ, kW), ground(kQ, kW));
  EquivalenceVerdict v = is_homotopy_equivalent(ag, 0, 1);
  CHECK(v.verdict == Trilean::No);
  CHECK(detail_mentions(v, "not both contractible"));
}

TEST_CASE("homotopy equivalence: witness found by the sweep") {
  DGCategoryTab t = iso_pair(kQ, kW);
  EquivalenceVerdict v = is_homotopy_equivalent(t, 0, 1);
  CHECK(v.verdict == Trilean::Yes);
  CHECK(detail_mentions(v, "sweep"));
  REQUIRE(v.witness.has_value());
  CHECK(is_invertible_h0(t, *v.witness));
  CHECK(morphism_eq(*v.witness, t.presentation()->gen_values.at("u")));
}

TEST_CASE("homotopy equivalence: pairwise combination witnesses") {
  DGCategoryTab t = combo_pair(kQ, kW);
  REQUIRE(t.status() == Tabulation::Complete);
  REQUIRE(t.dim(0, 1, 0) == 2);
  REQUIRE(t.dim(1, 0, 0) == 2);
  REQUIRE(t.dim(0, 0, 0) == 2);
  REQUIRE(t.dim(1, 1, 0) == 2);

  const Morphism p = t.presentation()->gen_values.at("p");
  const Morphism q = t.presentation()->gen_values.at("q");
  CHECK(!is_invertible_h0(t, p));
  CHECK(!is_invertible_h0(t, q));
  CHECK(is_invertible_h0(t, morphism_add(p, q)));

  EquivalenceVerdict v = is_homotopy_equivalent(t, 0, 1);
  CHECK(v.verdict == Trilean::Yes);
  CHECK(detail_mentions(v, "sweep"));
  REQUIRE(v.witness.has_value());
  CHECK(morphism_eq(*v.witness, morphism_add(p, q)));
}

TEST_CASE("homotopy equivalence: inconclusive when no sweep candidate works") {
  DGCategoryTab t = split_pair(kQ, kW);
  EquivalenceVerdict v = is_homotopy_equivalent(t, 0, 1);
  CHECK(v.verdict == Trilean::Inconclusive);
  CHECK(detail_mentions(v, "no swept witness"));
  CHECK(!v.witness.has_value());
}

TEST_CASE("homotopy equivalence: registered candidates are consulted first") {
  DGCategoryTab t = iso_pair(kQ, kW);
  const Morphism u = t.presentation()->gen_values.at("u");
  t.register_equiv(t.zero_morphism(0, 1, 0)); // useless candidate: skipped
  t.register_equiv(u);
  EquivalenceVerdict v = is_homotopy_equivalent(t, 0, 1);
  CHECK(v.verdict == Trilean::Yes);
  CHECK(detail_mentions(v, "registered"));
  REQUIRE(v.witness.has_value());
  CHECK(morphism_eq(*v.witness, u));
}
