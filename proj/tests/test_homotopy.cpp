#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgcalc/homotopy.hpp"
#include "dgcalc/quotient.hpp"
#include "helpers.hpp"

using namespace dgcalc;
using namespace dgtest;

namespace {

const Field kQ = Field::rationals();

Morphism gen(const DGCategoryTab& t, const std::string& name) {
  return t.presentation()->gen_values.at(name);
}

/* X --a--> Y --b--> Z, no relations */
DGCategoryTab chain3(Field f, Window w) {
  DGPresentation p(f);
  p.add_object("X");
  p.add_object("Y");
  p.add_object("Z");
  p.add_generator("a", "X", "Y", 0);
  p.add_generator("b", "Y", "Z", 0);
  return tabulate(p, w, 3);
}

}  // namespace

TEST_CASE("morphism-level homotopies") {
  DGCategoryTab s = square_zero(kQ, {-1, 1});
  const Morphism id = s.identity(0);
  const Morphism e = gen(s, "eps");

  // nothing in degree -1: only equal pairs are homotopic
  std::optional<Morphism> none = find_homotopy(s, id, e);
  CHECK_FALSE(none.has_value());
  std::optional<Morphism> triv = find_homotopy(s, id, id);
  REQUIRE(triv.has_value());
  CHECK(morphism_is_zero(*triv));
  CHECK(verify_homotopy(s, id, id, *triv));

  DGCategoryTab a = acyclic_endo(kQ, {-2, 1});
  const Morphism c = gen(a, "c");
  const Morphism z = a.zero_morphism(0, 0, 0);
  std::optional<Morphism> h = find_homotopy(a, a.identity(0), z);
  REQUIRE(h.has_value());
  CHECK(morphism_eq(*h, c));
  CHECK(verify_homotopy(a, a.identity(0), z, c));
  CHECK(is_null_homotopic(a, a.identity(0)));
  CHECK_FALSE(verify_homotopy(a, a.identity(0), z, a.zero_morphism(0, 0, -1)));

  // guards: parallel pair and witness degree
  CHECK_THROWS_AS(verify_homotopy(a, a.identity(0), c, c), StructuralError);
  CHECK_THROWS_AS(verify_homotopy(a, a.identity(0), z, a.identity(0)), StructuralError);
  // a pair at the window floor would need a witness one degree lower
  const Morphism floor = a.zero_morphism(0, 0, -2);
  CHECK_THROWS_AS(find_homotopy(a, floor, floor), WindowError);
}

TEST_CASE("functor homotopy on the arrow") {
  DGCategoryTab arr = arrow_cat(kQ, {-2, 1});
  DGCategoryTab b = acyclic_endo(kQ, {-2, 1});
  const Morphism c = gen(b, "c");
  DGFunctor F = functor_from_generators(arr, b, {{"X", 0}, {"Y", 0}}, {{"a", b.identity(0)}});
  DGFunctor G = functor_from_generators(arr, b, {{"X", 0}, {"Y", 0}},
                                        {{"a", b.zero_morphism(0, 0, 0)}});

  std::optional<FunctorHomotopy> h = find_functor_homotopy(F, G);
  REQUIRE(h.has_value());
  CHECK(check_functor_homotopy(*h).empty());
  // the defect equation forces h(a) = c
  CHECK(morphism_eq(h->apply(gen(arr, "a")), c));
  CHECK(morphism_is_zero(h->apply(arr.identity(0))));

  // a wrong witness is caught by the sweep
  FunctorHomotopy bad{F, G, {}};
  CHECK_FALSE(check_functor_homotopy(bad).empty());
}

TEST_CASE("functor homotopy through a composite chain") {
  DGCategoryTab ch = chain3(kQ, {-2, 1});
  DGCategoryTab b = acyclic_endo(kQ, {-2, 1});
  const Morphism id = b.identity(0);
  const Morphism c = gen(b, "c");
  std::map<std::string, std::size_t> objs{{"X", 0}, {"Y", 0}, {"Z", 0}};
  DGFunctor F = functor_from_generators(ch, b, objs, {{"a", id}, {"b", id}});
  DGFunctor G = functor_from_generators(
      ch, b, objs, {{"a", b.zero_morphism(0, 0, 0)}, {"b", b.zero_morphism(0, 0, 0)}});

  std::optional<FunctorHomotopy> h = find_functor_homotopy(F, G);
  REQUIRE(h.has_value());
  CHECK(check_functor_homotopy(*h).empty());
  CHECK(morphism_eq(h->apply(gen(ch, "a")), c));
  // on the composite the derivation rule gives h(b.a) = h(b).F(a) + G(b).h(a) = c
  Morphism ba = ch.compose(gen(ch, "b"), gen(ch, "a"));
  REQUIRE_FALSE(morphism_is_zero(ba));
  CHECK(morphism_eq(h->apply(ba), c));
}

TEST_CASE("functor homotopies that do not exist") {
  DGCategoryTab s = square_zero(kQ, {-2, 1});
  const Morphism e = gen(s, "eps");
  DGFunctor id = identity_functor(s);
  DGFunctor sigma =
      functor_from_generators(s, s, {{"X", 0}}, {{"eps", morphism_scale(-Scalar::one(kQ), e)}});
  // d h(eps) would have to be 2 eps, but nothing lives in degree -1
  CHECK_FALSE(find_functor_homotopy(id, sigma).has_value());

  // a functor is always homotopic to itself by the zero family
  std::optional<FunctorHomotopy> self = find_functor_homotopy(id, id);
  REQUIRE(self.has_value());
  CHECK(check_functor_homotopy(*self).empty());
  CHECK(morphism_is_zero(self->apply(e)));
}

TEST_CASE("functor homotopy guards") {
  DGCategoryTab a = acyclic_endo(kQ, {-3, 1});
  // the solve needs a presented source; a quotient category has none
  QuotientCat q = drinfeld_quotient(ground(kQ, {-2, 1}), {0});
  DGFunctor qid = identity_functor(q.cat);
  CHECK_THROWS_AS(find_functor_homotopy(qid, qid), PreconditionError);

  CHECK_THROWS_AS(find_functor_homotopy(identity_functor(a), identity_functor(ground(kQ, {-3, 1}))),
                  StructuralError);

  // a family over a floor-degree morphism cannot be represented
  DGCategoryTab shallow = acyclic_endo(kQ, {-1, 1});
  FunctorHomotopy empty{identity_functor(shallow), identity_functor(shallow), {}};
  CHECK_THROWS_AS(empty.apply(gen(shallow, "c")), WindowError);
  CHECK(morphism_is_zero(empty.apply(shallow.identity(0))));
  // every law either holds or leaves the window: the sweep stays silent
  CHECK(check_functor_homotopy(empty).empty());
}

TEST_CASE("functor homotopy over a contractible source") {
  DGCategoryTab a = acyclic_endo(kQ, {-3, 1});
  DGFunctor id = identity_functor(a);
  std::optional<FunctorHomotopy> h = find_functor_homotopy(id, id);
  REQUIRE(h.has_value());
  CHECK(check_functor_homotopy(*h).empty());
}
