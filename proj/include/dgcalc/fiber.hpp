#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "dgcalc/functor.hpp"
#include "dgcalc/tab.hpp"

namespace dgcalc {

/* Strict fiber product of F : A -> C and G : B -> C over their common
 * target.  Objects are pairs (x, y) with F x = G y on the nose; a degree-n
 * morphism (x,y) -> (x',y') is a pair (a, b) with F a = G b, tabulated as
 * the kernel of [F | -G] on each hom slot.  Differential and composition
 * act componentwise.  All three categories must share field and window. */
struct FiberCat {
  DGCategoryTab cat;
  DGCategoryTab a, b;
  std::vector<std::pair<std::size_t, std::size_t>> objs;
  /* per (s, t, n): chosen kernel vectors, each of length dim_A + dim_B */
  std::map<std::tuple<std::size_t, std::size_t, int>, std::vector<Vec>> basis;

  std::optional<std::size_t> obj_index(std::size_t x, std::size_t y) const;
};

FiberCat fiber_product(const DGFunctor& F, const DGFunctor& G);

/* The pair (f, g) as a fiber morphism; requires F f = G g (checked against
 * the stored kernel bases). */
Morphism fiber_morphism(const FiberCat& fc, const Morphism& f, const Morphism& g);

/* The two component blocks of a fiber morphism. */
Morphism fiber_component_a(const FiberCat& fc, const Morphism& m);
Morphism fiber_component_b(const FiberCat& fc, const Morphism& m);

/* Projections (x,y) |-> x and (x,y) |-> y. */
DGFunctor fiber_pa(const FiberCat& fc);
DGFunctor fiber_pb(const FiberCat& fc);

/* The functor D -> fiber induced by H1 : D -> A and H2 : D -> B whenever
 * every pair (H1 d, H2 d) is a fiber object and every pair of image
 * morphisms agrees; throws StructuralError otherwise. */
DGFunctor fiber_pair_functor(const FiberCat& fc, const DGFunctor& H1, const DGFunctor& H2);

}  // namespace dgcalc
