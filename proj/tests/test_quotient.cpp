#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgcalc/qe.hpp"
#include "dgcalc/quotient.hpp"
#include "helpers.hpp"

using namespace dgcalc;
using namespace dgtest;

namespace {

const Field kQ = Field::rationals();

Morphism gen(const DGCategoryTab& t, const std::string& name) {
  return t.presentation()->gen_values.at(name);
}

}  // namespace

TEST_CASE("contracting the one-object trivial category") {
  DGCategoryTab base = ground(kQ, {-6, 1});
  QuotientCat q = drinfeld_quotient(base, {0});
  CHECK(q.cat.window() == Window{-6, 1});
  CHECK(q.cat.status() == Tabulation::Complete);

  // one word per degree: id, id.h.id, id.h.id.h.id, ...
  for (int n = -6; n <= 0; ++n) CHECK(q.cat.dim(0, 0, n) == 1);
  CHECK(q.cat.dim(0, 0, 1) == 0);
  CHECK(q.words.at({0, 0, -3}).front().zs.size() == 3);

  CHECK(check_axioms(q.cat).empty());

  // d alternates: the word with k insertions maps to k copies of the word
  // with k-1, with signs cancelling in pairs
  Morphism h = quotient_h(q, 0);
  CHECK(morphism_eq(q.cat.differential(h), q.cat.identity(0)));
  CHECK(morphism_is_zero(q.cat.differential(q.cat.basis_morphism(0, 0, -2, 0))));
  CHECK(morphism_eq(q.cat.differential(q.cat.basis_morphism(0, 0, -3, 0)),
                    q.cat.basis_morphism(0, 0, -2, 0)));

  CHECK(is_contractible(q.cat, 0));

  DGFunctor eta = quotient_eta(q);
  CHECK(eta.check().empty());
  CHECK(morphism_eq(eta.apply(base.identity(0)), q.cat.identity(0)));

  // h . h vanishes: the words h.id.h collapse under the junction identity
  CHECK(morphism_eq(q.cat.compose(h, h), q.cat.basis_morphism(0, 0, -2, 0)));
}

TEST_CASE("contracting an object with a square-zero endomorphism") {
  DGCategoryTab base = square_zero(kQ, {-4, 1});
  QuotientCat q = drinfeld_quotient(base, {0});
  CHECK(q.cat.status() == Tabulation::Complete);
  // at degree -k the words interleave k insertions with k+1 picks of id/eps
  CHECK(q.cat.dim(0, 0, 0) == 2);
  CHECK(q.cat.dim(0, 0, -1) == 4);
  CHECK(q.cat.dim(0, 0, -2) == 8);
  CHECK(check_axioms(q.cat).empty());
  CHECK(is_contractible(q.cat, 0));

  Morphism h = quotient_h(q, 0);
  CHECK(morphism_eq(q.cat.differential(h), q.cat.identity(0)));

  // eta respects composition: eps^2 = 0 survives into the quotient
  DGFunctor eta = quotient_eta(q);
  CHECK(eta.check().empty());
  Morphism qe = eta.apply(gen(base, "eps"));
  CHECK(morphism_is_zero(q.cat.compose(qe, qe)));
}

TEST_CASE("contracting one end of the arrow kills the arrow's class") {
  DGCategoryTab base = arrow_cat(kQ, {-4, 1});
  QuotientCat q = drinfeld_quotient(base, {1});
  CHECK(q.cat.status() == Tabulation::Complete);
  CHECK(check_axioms(q.cat).empty());
  CHECK(is_contractible(q.cat, 1));
  CHECK_FALSE(is_contractible(q.cat, 0));

  // X -> Y homs: a, then id.h.a, id.h.id.h.a, ... one word per degree
  CHECK(q.cat.dim(0, 1, 0) == 1);
  CHECK(q.cat.dim(0, 1, -1) == 1);
  // d(id.h.a) = a, so the arrow's degree-0 class dies
  Morphism w = q.cat.basis_morphism(0, 1, -1, 0);
  CHECK(morphism_eq(q.cat.differential(w), q.cat.basis_morphism(0, 1, 0, 0)));

  // the projection is not a quasi-equivalence: Hom(X, Y) loses its class
  DGFunctor eta = quotient_eta(q);
  CHECK(eta.check().empty());
  ProxyResult pr = morita_proxy(eta);
  CHECK(pr.verdict == Trilean::No);
}

TEST_CASE("contracting an already contractible object preserves everything") {
  DGCategoryTab base = disjoint_union(ground(kQ, {-4, 1}), acyclic_endo(kQ, {-4, 1}));
  REQUIRE(base.num_objects() == 2);
  REQUIRE(is_contractible(base, 1));
  QuotientCat q = drinfeld_quotient(base, {1});
  CHECK(q.cat.status() == Tabulation::Complete);
  CHECK(check_axioms(q.cat).empty());

  DGFunctor eta = quotient_eta(q);
  CHECK(eta.check().empty());
  ProxyResult pr = morita_proxy(eta);
  CHECK(pr.verdict == Trilean::Yes);
}

TEST_CASE("induced functor between quotients") {
  DGCategoryTab a1 = acyclic_endo(kQ, {-3, 1});
  DGCategoryTab u = disjoint_union(a1, a1);

  // the swap of the two mirrored objects
  DGFunctor swap(u, u);
  swap.set_object_image(0, 1);
  swap.set_object_image(1, 0);
  for (std::size_t s = 0; s < 2; ++s)
    for (int n = -3; n <= 1; ++n) {
      const std::size_t d = u.dim(s, s, n);
      if (d) swap.set_hom_matrix(s, s, n, Matrix::identity(kQ, d));
    }
  REQUIRE(swap.check().empty());

  QuotientCat qa = drinfeld_quotient(u, {0});
  QuotientCat qb = drinfeld_quotient(u, {1});
  DGFunctor ind = quotient_induced_functor(qa, qb, swap);
  CHECK(ind.check().empty());
  CHECK(ind.object_image(0) == 1);
  CHECK(ind.object_image(1) == 0);
  // h(0) maps to h(1)
  CHECK(morphism_eq(ind.apply(quotient_h(qa, 0)), quotient_h(qb, 1)));

  // identity base functor induces the identity
  DGFunctor same = quotient_induced_functor(qa, qa, identity_functor(u));
  CHECK(same == identity_functor(qa.cat));

  // the swap does not preserve the contracted set of qa
  CHECK_THROWS_AS(quotient_induced_functor(qa, qa, swap), PreconditionError);
}

TEST_CASE("quotient construction guards") {
  DGCategoryTab trunc = square_zero(kQ, {-2, 1}, 1);
  REQUIRE(trunc.status() == Tabulation::Truncated);
  CHECK_THROWS_AS(drinfeld_quotient(trunc, {0}), PreconditionError);

  DGCategoryTab nt = nontrivial_differential(kQ, {-1, 1});
  // positive-degree data cannot be contracted away
  CHECK_THROWS_AS(drinfeld_quotient(nt, {0}), PreconditionError);

  DGCategoryTab g = ground(kQ, {-2, 1});
  CHECK_THROWS_AS(drinfeld_quotient(g, {0, 0}), StructuralError);

  QuotientCat q = drinfeld_quotient(ground(kQ, {-2, 1}), {0});
  CHECK_THROWS_AS(quotient_h(q, 7), PreconditionError);

  // window too shallow to see the contracting endomorphism
  QuotientCat q2 = drinfeld_quotient(ground(kQ, {0, 1}), {0});
  CHECK(q2.cat.status() == Tabulation::Complete);
  CHECK(q2.cat.dim(0, 0, 0) == 1);
  CHECK_THROWS_AS(quotient_h(q2, 0), WindowError);
}
