#pragma once
#include "dgcalc/presentation.hpp"

/* Small presented categories the tests keep coming back to. Each builder
 * returns a fully tabulated category over the given field and window. */
namespace dgtest {

using namespace dgcalc;

/* One object, nothing but its identity. */
inline DGCategoryTab ground(Field f, Window w, const std::string& label = "X") {
  DGPresentation p(f);
  p.add_object(label);
  return tabulate(p, w, 2);
}

/* One object with a degree-0 endomorphism squaring to zero. */
inline DGCategoryTab square_zero(Field f, Window w, int cap = 2) {
  DGPresentation p(f);
  p.add_object("X");
  p.add_generator("eps", "X", "X", 0);
  p.add_relation(pc_term(Scalar::one(f), pw({"eps", "eps"})));
  return tabulate(p, w, cap);
}

/* One object with a degree -1 endomorphism c, d(c) = id, c.c = 0: the
 * object is contractible with c as the witness. */
inline DGCategoryTab acyclic_endo(Field f, Window w, int cap = 2) {
  DGPresentation p(f);
  p.add_object("X");
  p.add_generator("c", "X", "X", -1);
  p.set_gen_diff("c", pc_term(Scalar::one(f), pw_id("X")));
  p.add_relation(pc_term(Scalar::one(f), pw({"c", "c"})));
  return tabulate(p, w, cap);
}

/* Two objects joined by a single degree-0 morphism a : X -> Y. */
inline DGCategoryTab arrow_cat(Field f, Window w, int cap = 2) {
  DGPresentation p(f);
  p.add_object("X");
  p.add_object("Y");
  p.add_generator("a", "X", "Y", 0);
  return tabulate(p, w, cap);
}

/* One object whose identity is declared zero: every hom space vanishes. */
inline DGCategoryTab zero_cat(Field f, Window w) {
  DGPresentation p(f);
  p.add_object("z");
  p.add_relation(pc_term(Scalar::one(f), pw_id("z")));
  return tabulate(p, w, 2);
}

/* Morphisms both ways whose composites both vanish: the objects are not
 * isomorphic in degree-0 cohomology, but no finite sweep can certify that. */
inline DGCategoryTab split_pair(Field f, Window w, int cap = 2) {
  DGPresentation p(f);
  p.add_object("X");
  p.add_object("Y");
  p.add_generator("fw", "X", "Y", 0);
  p.add_generator("bk", "Y", "X", 0);
  p.add_relation(pc_term(Scalar::one(f), pw({"fw", "bk"})));
  p.add_relation(pc_term(Scalar::one(f), pw({"bk", "fw"})));
  return tabulate(p, w, cap);
}

/* Strictly inverse morphisms u, v: the two objects are isomorphic on the
 * nose. */
inline DGCategoryTab iso_pair(Field f, Window w, int cap = 2) {
  DGPresentation p(f);
  p.add_object("X");
  p.add_object("Y");
  p.add_generator("u", "X", "Y", 0);
  p.add_generator("v", "Y", "X", 0);
  PComb uv = pc_term(Scalar::one(f), pw({"u", "v"}));
  pc_add(uv, -Scalar::one(f), pw_id("Y"));
  p.add_relation(std::move(uv));
  PComb vu = pc_term(Scalar::one(f), pw({"v", "u"}));
  pc_add(vu, -Scalar::one(f), pw_id("X"));
  p.add_relation(std::move(vu));
  return tabulate(p, w, cap);
}

/* Neither p nor q is invertible, but p + q is, with inverse c: only the
 * pairwise-combination sweep finds the witness. Modeled on two rank-2
 * objects with p, q a pair of complementary diagonal projections read as
 * maps across and c the identity read backwards. */
inline DGCategoryTab combo_pair(Field f, Window w) {
  DGPresentation pr(f);
  pr.add_object("X");
  pr.add_object("Y");
  pr.add_generator("p", "X", "Y", 0);
  pr.add_generator("q", "X", "Y", 0);
  pr.add_generator("c", "Y", "X", 0);
  const Scalar one = Scalar::one(f);
  PComb sumR = pc_term(one, pw({"p", "c"}));
  pc_add(sumR, one, pw({"q", "c"}));
  pc_add(sumR, -one, pw_id("Y"));
  pr.add_relation(std::move(sumR));
  PComb sumL = pc_term(one, pw({"c", "p"}));
  pc_add(sumL, one, pw({"c", "q"}));
  pc_add(sumL, -one, pw_id("X"));
  pr.add_relation(std::move(sumL));
  PComb pp = pc_term(one, pw({"p", "c", "p"}));
  pc_add(pp, -one, pw({"p"}));
  pr.add_relation(std::move(pp));
  PComb qq = pc_term(one, pw({"q", "c", "q"}));
  pc_add(qq, -one, pw({"q"}));
  pr.add_relation(std::move(qq));
  pr.add_relation(pc_term(one, pw({"p", "c", "q"})));
  pr.add_relation(pc_term(one, pw({"q", "c", "p"})));
  return tabulate(pr, w, 4);
}

/* A degree-0 endomorphism m with d(m) = z nonzero: m is not a cocycle.
 * The degree-1 generator keeps the tabulation truncated; the tests only
 * probe precondition handling here. */
inline DGCategoryTab nontrivial_differential(Field f, Window w, int cap = 2) {
  DGPresentation p(f);
  p.add_object("X");
  p.add_generator("m", "X", "X", 0);
  p.add_generator("z", "X", "X", 1);
  p.set_gen_diff("m", pc_term(Scalar::one(f), pw({"z"})));
  p.add_relation(pc_term(Scalar::one(f), pw({"m", "m"})));
  p.add_relation(pc_term(Scalar::one(f), pw({"m", "z"})));
  p.add_relation(pc_term(Scalar::one(f), pw({"z", "m"})));
  p.add_relation(pc_term(Scalar::one(f), pw({"z", "z"})));
  return tabulate(p, w, cap);
}

} // namespace dgtest
