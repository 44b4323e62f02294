#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgcalc/fiber.hpp"
#include "dgcalc/fun_cat.hpp"
#include "dgcalc/path.hpp"
#include "dgcalc/qe.hpp"
#include "dgcalc/tensor.hpp"
#include "helpers.hpp"

using namespace dgcalc;
using namespace dgtest;

namespace {

const Field kQ = Field::rationals();

Morphism gen(const DGCategoryTab& t, const std::string& name) {
  return t.presentation()->gen_values.at(name);
}

Morphism neg(const Morphism& m) { return morphism_scale(-Scalar::one(kQ), m); }

Morphism sub(const Morphism& a, const Morphism& b) { return morphism_add(a, neg(b)); }

}  // namespace

// ---------------------------------------------------------------- tensor --

TEST_CASE("tensor of two trivial one-object categories") {
  DGCategoryTab g = ground(kQ, {-1, 1});
  TensorCat t = tensor_cat(g, g);
  CHECK(t.cat.window() == Window{-1, 1});
  CHECK(t.cat.num_objects() == 1);
  CHECK(t.cat.dim(0, 0, 0) == 1);
  CHECK(t.cat.dim(0, 0, -1) == 0);
  CHECK(t.cat.status() == Tabulation::Complete);
  CHECK(check_axioms(t.cat).empty());
  CHECK(morphism_eq(t.cat.identity(0), t.cat.basis_morphism(0, 0, 0, 0)));

  CHECK_THROWS_AS(tensor_cat(g, ground(Field::prime(3), {-1, 1})), StructuralError);
}

TEST_CASE("tensor dimensions, Leibniz sign, and composition sign") {
  DGCategoryTab a = acyclic_endo(kQ, {-2, 1});
  TensorCat t = tensor_cat(a, a);
  CHECK(t.cat.window() == Window{-2, 1});
  CHECK(t.cat.status() == Tabulation::Complete);
  // basis of the factor: id in degree 0, c in degree -1 with c.c = 0
  CHECK(t.cat.dim(0, 0, 0) == 1);   // id (x) id
  CHECK(t.cat.dim(0, 0, -1) == 2);  // c (x) id and id (x) c
  CHECK(t.cat.dim(0, 0, -2) == 1);  // c (x) c
  CHECK(t.cat.dim(0, 0, 1) == 0);
  CHECK(check_axioms(t.cat).empty());

  const Morphism id = a.identity(0);
  const Morphism c = gen(a, "c");
  const Morphism cc = tensor_morphism(t, c, c);
  const Morphism ci = tensor_morphism(t, c, id);
  const Morphism ic = tensor_morphism(t, id, c);

  // d(c (x) c) = dc (x) c - c (x) dc = id (x) c - c (x) id
  CHECK(morphism_eq(t.cat.differential(cc), sub(ic, ci)));
  // d(c (x) id) = id (x) id
  CHECK(morphism_eq(t.cat.differential(ci), t.cat.identity(0)));

  // (id (x) c) . (c (x) id) picks up (-1)^((-1)(-1)); the other order does not
  CHECK(morphism_eq(t.cat.compose(ic, ci), neg(cc)));
  CHECK(morphism_eq(t.cat.compose(ci, ic), cc));

  // c (x) id contracts the paired object
  CHECK(is_contractible(t.cat, 0));
}

TEST_CASE("tensor of square-zero endomorphism categories") {
  DGCategoryTab s = square_zero(kQ, {-1, 1});
  TensorCat t = tensor_cat(s, s);
  CHECK(t.cat.dim(0, 0, 0) == 4);
  CHECK(check_axioms(t.cat).empty());

  const Morphism id = s.identity(0);
  const Morphism e = gen(s, "eps");
  const Morphism ei = tensor_morphism(t, e, id);
  const Morphism ie = tensor_morphism(t, id, e);
  const Morphism ee = tensor_morphism(t, e, e);
  // all factors sit in degree 0: no signs anywhere
  CHECK(morphism_eq(t.cat.compose(ei, ie), ee));
  CHECK(morphism_eq(t.cat.compose(ie, ei), ee));
  CHECK(morphism_is_zero(t.cat.compose(ee, ee)));
}

TEST_CASE("tensor propagates truncation honestly") {
  DGCategoryTab trunc = square_zero(kQ, {-1, 1}, 1);  // cap 1: eps.eps unresolved
  REQUIRE(trunc.status() == Tabulation::Truncated);
  TensorCat t = tensor_cat(trunc, ground(kQ, {-1, 1}));
  CHECK(t.cat.status() == Tabulation::Truncated);
  const Morphism e = gen(trunc, "eps");
  const Morphism ei = tensor_morphism(t, e, ground(kQ, {-1, 1}).identity(0));
  CHECK_THROWS_AS(t.cat.compose(ei, ei), CapError);
}

TEST_CASE("swap functor carries the Koszul sign and squares to the identity") {
  DGCategoryTab a = acyclic_endo(kQ, {-2, 1});
  TensorCat aa = tensor_cat(a, a);
  DGFunctor sw = swap_functor(aa, aa);
  CHECK(sw.check().empty());

  const Morphism id = a.identity(0);
  const Morphism c = gen(a, "c");
  // deg -1 against deg 0: sign +1; deg -1 against deg -1: sign -1
  CHECK(morphism_eq(sw.apply(tensor_morphism(aa, c, id)), tensor_morphism(aa, id, c)));
  CHECK(morphism_eq(sw.apply(tensor_morphism(aa, c, c)), neg(tensor_morphism(aa, c, c))));
  CHECK(compose_functors(sw, sw) == identity_functor(aa.cat));

  // across two distinct factors
  DGCategoryTab s = square_zero(kQ, {-1, 1});
  DGCategoryTab a1 = acyclic_endo(kQ, {-1, 1});
  TensorCat as = tensor_cat(a1, s);
  TensorCat sa = tensor_cat(s, a1);
  DGFunctor sw2 = swap_functor(as, sa);
  CHECK(sw2.check().empty());
  CHECK(morphism_eq(sw2.apply(tensor_morphism(as, gen(a1, "c"), gen(s, "eps"))),
                    tensor_morphism(sa, gen(s, "eps"), gen(a1, "c"))));
}

TEST_CASE("left unit functor is a quasi-equivalence from a point pairing") {
  DGCategoryTab pt = ground(kQ, {-1, 1}, "k");
  DGCategoryTab s = square_zero(kQ, {-1, 1});
  TensorCat ka = tensor_cat(pt, s);
  DGFunctor lu = left_unit_functor(ka);
  CHECK(lu.check().empty());
  CHECK(morphism_eq(lu.apply(tensor_morphism(ka, pt.identity(0), gen(s, "eps"))), gen(s, "eps")));
  CHECK(is_quasi_equivalence(lu).pass);

  CHECK_THROWS_AS(left_unit_functor(tensor_cat(s, s)), PreconditionError);
}

// ------------------------------------------------------------------ path --

TEST_CASE("path category over a contractible endomorphism object") {
  DGCategoryTab base = acyclic_endo(kQ, {-3, 1});
  PathCat pc = path_cat(base, path_diagonal(base));
  CHECK(pc.cat.window() == Window{-2, 1});
  CHECK(pc.cat.num_objects() == 1);
  CHECK(pc.cat.status() == Tabulation::Complete);
  // blocks (a, b, h) with h one degree lower
  CHECK(pc.cat.dim(0, 0, 0) == 3);
  CHECK(pc.cat.dim(0, 0, -1) == 2);
  CHECK(pc.cat.dim(0, 0, 1) == 1);
  CHECK(pc.cat.dim(0, 0, -2) == 0);
  CHECK(check_axioms(pc.cat).empty());

  const Morphism id = base.identity(0);
  const Morphism c = gen(base, "c");
  const Morphism z0 = base.zero_morphism(0, 0, 0);
  const Morphism zm1 = base.zero_morphism(0, 0, -1);

  // d(id, 0, 0) has h-part id.a - b.id = id
  Morphism m = path_build(pc, 0, 0, id, z0, zm1);
  Morphism dm = pc.cat.differential(m);
  CHECK(morphism_is_zero(path_component_a(pc, dm)));
  CHECK(morphism_is_zero(path_component_b(pc, dm)));
  CHECK(morphism_eq(path_component_h(pc, dm), id));

  // at odd degree the cross term flips sign; here it cancels outright
  Morphism m2 = path_build(pc, 0, 0, c, c, base.zero_morphism(0, 0, -2));
  Morphism dm2 = pc.cat.differential(m2);
  CHECK(morphism_eq(path_component_a(pc, dm2), id));
  CHECK(morphism_eq(path_component_b(pc, dm2), id));
  CHECK(morphism_is_zero(path_component_h(pc, dm2)));

  // h-block composition: sign of the second factor's degree on h.a'
  Morphism u = path_build(pc, 0, 0, base.zero_morphism(0, 0, 1), base.zero_morphism(0, 0, 1), id);
  Morphism v = path_build(pc, 0, 0, c, c, base.zero_morphism(0, 0, -2));
  CHECK(morphism_eq(path_component_h(pc, pc.cat.compose(u, v)), neg(c)));
  CHECK(morphism_eq(path_component_h(pc, pc.cat.compose(v, u)), c));

  // component round trip
  Morphism w = path_build(pc, 0, 0, id, z0, c);
  CHECK(morphism_eq(path_component_a(pc, w), id));
  CHECK(morphism_is_zero(path_component_b(pc, w)));
  CHECK(morphism_eq(path_component_h(pc, w), c));
}

TEST_CASE("path projections and diagonal embedding") {
  DGCategoryTab base = acyclic_endo(kQ, {-3, 1});
  PathCat pc = path_cat(base, path_diagonal(base));
  DGFunctor p0 = path_p0(pc);
  DGFunctor p1 = path_p1(pc);
  DGFunctor emb = path_i(pc);
  CHECK(p0.check().empty());
  CHECK(p1.check().empty());
  CHECK(emb.check().empty());

  DGCategoryTab rb = window_restrict(base, pc.cat.window());
  CHECK(compose_functors(p0, emb) == identity_functor(rb));
  CHECK(compose_functors(p1, emb) == identity_functor(rb));

  CHECK(is_quasi_equivalence(emb).pass);
  CHECK(is_quasi_equivalence(p0).pass);
  CHECK(is_quasi_equivalence(p1).pass);
  CHECK(path_projection_failures(pc).empty());

  std::optional<Morphism> contr = path_contraction(pc, 0);
  REQUIRE(contr.has_value());
  CHECK(morphism_eq(pc.cat.differential(*contr), pc.cat.identity(0)));
  CHECK(is_contractible(pc.cat, 0));
}

TEST_CASE("path category with a non-diagonal triple") {
  DGCategoryTab base = iso_pair(kQ, {-2, 1});
  const Morphism u = gen(base, "u");
  std::vector<PathTriple> triples = path_diagonal(base);
  triples.push_back({0, 1, u});
  PathCat pc = path_cat(base, triples);
  REQUIRE(pc.cat.num_objects() == 3);
  CHECK(pc.find_triple(0, 1, u).value() == 2);
  CHECK(check_axioms(pc.cat).empty());
  CHECK(path_projection_failures(pc).empty());

  CHECK(path_p0(pc).object_image(2) == 0);
  CHECK(path_p1(pc).object_image(2) == 1);

  // (id, u, 0) joins the diagonal over X to the twisted triple
  Morphism j = path_build(pc, 0, 2, base.identity(0), u, base.zero_morphism(0, 1, -1));
  CHECK(morphism_is_zero(pc.cat.differential(j)));
  CHECK(is_invertible_h0(pc.cat, j));
  CHECK(is_homotopy_equivalent(pc.cat, 0, 2).verdict == Trilean::Yes);
}

TEST_CASE("path construction guards") {
  CHECK_THROWS_AS(path_cat(ground(kQ, {0, 1}), path_diagonal(ground(kQ, {0, 1}))), WindowError);

  DGCategoryTab nt = nontrivial_differential(kQ, {-1, 1});
  CHECK_THROWS_AS(path_cat(nt, {{0, 0, gen(nt, "m")}}), PreconditionError);  // not a cocycle

  DGCategoryTab s = square_zero(kQ, {-2, 1});
  CHECK_THROWS_AS(path_cat(s, {{0, 0, gen(s, "eps")}}), PreconditionError);  // not invertible

  DGCategoryTab a = acyclic_endo(kQ, {-2, 1});
  CHECK_THROWS_AS(path_cat(a, {{0, 0, gen(a, "c")}}), PreconditionError);  // wrong degree

  PathCat pc = path_cat(s, path_diagonal(s));
  CHECK_FALSE(path_contraction(pc, 0).has_value());  // no contraction in the base
  CHECK_THROWS_AS(path_contraction(pc, 7), StructuralError);

  PathCat shallow = path_cat(acyclic_endo(kQ, {-1, 1}), path_diagonal(acyclic_endo(kQ, {-1, 1})));
  CHECK_THROWS_AS(path_contraction(shallow, 0), WindowError);
}

// ----------------------------------------------------------------- fiber --

TEST_CASE("fiber product of identity functors recovers the base") {
  DGCategoryTab s = square_zero(kQ, {-1, 1});
  FiberCat fc = fiber_product(identity_functor(s), identity_functor(s));
  REQUIRE(fc.objs.size() == 1);
  CHECK(fc.obj_index(0, 0).value() == 0);
  CHECK(fc.cat.dim(0, 0, 0) == 2);
  CHECK(fc.cat.dim(0, 0, -1) == 0);
  CHECK(fc.cat.status() == Tabulation::Complete);
  CHECK(check_axioms(fc.cat).empty());

  const Morphism e = gen(s, "eps");
  Morphism m = fiber_morphism(fc, e, e);
  CHECK(morphism_eq(fiber_component_a(fc, m), e));
  CHECK(morphism_eq(fiber_component_b(fc, m), e));
  CHECK(morphism_is_zero(fc.cat.compose(m, m)));
  CHECK_THROWS_AS(fiber_morphism(fc, e, s.zero_morphism(0, 0, 0)), PreconditionError);

  DGFunctor pa = fiber_pa(fc);
  CHECK(pa.check().empty());
  CHECK(is_quasi_equivalence(pa).pass);
}

TEST_CASE("fiber product against a sign-twist automorphism") {
  DGCategoryTab s = square_zero(kQ, {-1, 1});
  const Morphism e = gen(s, "eps");
  DGFunctor sigma =
      functor_from_generators(s, s, {{"X", 0}}, {{"eps", neg(e)}});
  FiberCat fc = fiber_product(sigma, identity_functor(s));
  REQUIRE(fc.objs.size() == 1);
  CHECK(fc.cat.dim(0, 0, 0) == 2);  // pairs (a, sigma a)

  Morphism m = fiber_morphism(fc, e, neg(e));
  CHECK(morphism_eq(fiber_component_a(fc, m), e));
  CHECK(morphism_eq(fiber_component_b(fc, m), neg(e)));
  CHECK_THROWS_AS(fiber_morphism(fc, e, e), PreconditionError);

  DGFunctor pair = fiber_pair_functor(fc, identity_functor(s), sigma);
  CHECK(pair.check().empty());
  CHECK(compose_functors(fiber_pa(fc), pair) == identity_functor(s));
  CHECK(compose_functors(fiber_pb(fc), pair) == sigma);
}

TEST_CASE("fiber product across distinct categories") {
  DGCategoryTab arr = arrow_cat(kQ, {-1, 1});
  DGCategoryTab g = ground(kQ, {-1, 1});
  DGFunctor into = functor_from_generators(g, arr, {{"X", 0}}, {});
  FiberCat fc = fiber_product(identity_functor(arr), into);
  REQUIRE(fc.objs.size() == 1);
  CHECK(fc.objs[0] == std::pair<std::size_t, std::size_t>{0, 0});
  CHECK(fc.cat.dim(0, 0, 0) == 1);
  CHECK(check_axioms(fc.cat).empty());

  CHECK_THROWS_AS(fiber_product(identity_functor(arr), identity_functor(g)), StructuralError);
}

// ------------------------------------------------------- functor category --

TEST_CASE("endofunctor category over a contractible object") {
  DGCategoryTab a = acyclic_endo(kQ, {-3, 1});
  FunCat fn = fun_dg(a, a, {identity_functor(a)});
  REQUIRE(fn.cat.num_objects() == 1);
  CHECK(fn.find_functor(identity_functor(a)).value() == 0);
  CHECK(fn.cat.status() == Tabulation::Complete);
  CHECK(fn.cat.dim(0, 0, 0) == 1);
  CHECK(fn.cat.dim(0, 0, -1) == 1);
  CHECK(fn.cat.dim(0, 0, -2) == 0);
  CHECK(check_axioms(fn.cat).empty());
  CHECK(is_contractible(fn.cat, 0));

  Morphism m = fn.cat.basis_morphism(0, 0, 0, 0);
  Morphism rebuilt = nat_from_components(fn, 0, 0, 0, {nat_component(fn, m, 0)});
  CHECK(morphism_eq(rebuilt, m));
}

TEST_CASE("functor category over the arrow") {
  DGCategoryTab arr = arrow_cat(kQ, {-1, 1});
  DGCategoryTab s = square_zero(kQ, {-1, 1});
  const Morphism e = gen(s, "eps");
  const Morphism id = s.identity(0);
  DGFunctor F = functor_from_generators(arr, s, {{"X", 0}, {"Y", 0}}, {{"a", id}});
  DGFunctor G = functor_from_generators(arr, s, {{"X", 0}, {"Y", 0}}, {{"a", e}});
  FunCat fn = fun_dg(arr, s, {F, G});
  REQUIRE(fn.cat.num_objects() == 2);
  CHECK(fn.find_functor(F).value() == 0);
  CHECK(fn.find_functor(G).value() == 1);
  CHECK(fn.cat.status() == Tabulation::Complete);

  // strict naturality against a: phi_Y . F(a) = G(a) . phi_X
  CHECK(fn.cat.dim(0, 0, 0) == 2);  // phi_Y = phi_X
  CHECK(fn.cat.dim(0, 1, 0) == 2);  // phi_Y = eps . phi_X
  CHECK(fn.cat.dim(1, 0, 0) == 2);  // phi_X = phi_Y . eps
  CHECK(check_axioms(fn.cat).empty());

  Morphism phi = nat_from_components(fn, 0, 1, 0, {id, e});
  Morphism psi = nat_from_components(fn, 1, 0, 0, {e, id});
  Morphism comp = fn.cat.compose(psi, phi);  // components (eps.id, id.eps)
  CHECK(morphism_eq(comp, nat_from_components(fn, 0, 0, 0, {e, e})));
  CHECK(morphism_eq(nat_component(fn, phi, 1), e));

  CHECK_THROWS_AS(nat_from_components(fn, 0, 1, 0, {id, id}), PreconditionError);

  // whiskering by the sign twist must find the image functors in the roster
  DGFunctor sigma = functor_from_generators(s, s, {{"X", 0}}, {{"eps", neg(e)}});
  CHECK_THROWS_AS(fun_postcompose(fn, fn, sigma), StructuralError);
  DGFunctor Gneg = functor_from_generators(arr, s, {{"X", 0}, {"Y", 0}}, {{"a", neg(e)}});
  FunCat big = fun_dg(arr, s, {F, G, Gneg});
  DGFunctor post = fun_postcompose(fn, big, sigma);
  CHECK(post.check().empty());
  CHECK(post.object_image(0) == 0);
  CHECK(post.object_image(1) == 2);

  // Restriction along the inclusion of the source object. F and G differ
  // only on the arrow generator, so both restrict to the same functor and
  // land on the first roster slot.
  DGCategoryTab sub = full_subcategory(arr, {0});
  DGFunctor inc = inclusion_functor(arr, {0});
  FunCat small = fun_dg(sub, s, {compose_functors(F, inc)});
  DGFunctor restr = fun_restrict(fn, small, inc);
  CHECK(restr.check().empty());
  CHECK(restr.object_image(0) == 0);
  CHECK(restr.object_image(1) == 0);
}

TEST_CASE("functor category marks invisible constraints as truncation") {
  // window [-1, 1]: the constraint on a degree -1 family against the
  // degree -1 generator lands at -2, outside the window
  DGCategoryTab a = acyclic_endo(kQ, {-1, 1});
  FunCat fn = fun_dg(a, a, {identity_functor(a)});
  CHECK(fn.cat.status() == Tabulation::Truncated);
  CHECK(fn.cat.dim(0, 0, -1) == 1);

  // mismatched windows are rejected outright
  DGCategoryTab b = square_zero(kQ, {-2, 1});
  DGFunctor f(a, b);
  f.set_object_image(0, 0);
  CHECK_THROWS_AS(fun_dg(a, b, {f}), StructuralError);
}
