#pragma once
#include <utility>
#include <vector>

#include "dgcalc/functor.hpp"

namespace dgcalc {

/* Tensor product of two tabulated categories. Objects are pairs; a hom
 * space at degree n is the direct sum over degree splittings p + q = n of
 * the factor hom spaces, ordered by ascending p and labeled "f (x) g".
 *
 * The differential follows the graded Leibniz rule with the sign on the
 * left factor's degree; composing introduces the Koszul sign from moving
 * the right factor's first component across the left factor's second:
 *
 *   d(f (x) g)               = df (x) g + (-1)^deg(f) f (x) dg
 *   (f (x) g) . (f' (x) g')  = (-1)^(deg(g) deg(f')) (f.f') (x) (g.g')
 *
 * The window is [max(lo_a + sup_b, lo_b + sup_a), min(hi_a, hi_b)]: degrees
 * where every contributing splitting is visible in the factors. Junction
 * degrees that fall outside a factor's window but under its sup bound
 * cannot be computed; those entries are left unavailable and the result is
 * marked truncated. */
struct TensorCat {
  DGCategoryTab cat;
  DGCategoryTab a, b;
  std::vector<std::pair<std::size_t, std::size_t>> objs;

  std::size_t obj_index(std::size_t x, std::size_t y) const;
};

TensorCat tensor_cat(const DGCategoryTab& a, const DGCategoryTab& b);

/* The element f (x) g of the tensor category, for f, g morphisms of the
 * factors. */
Morphism tensor_morphism(const TensorCat& t, const Morphism& f, const Morphism& g);

/* Componentwise functor F (x) G between two tensor categories. */
DGFunctor tensor_functor(const TensorCat& src, const TensorCat& tgt, const DGFunctor& f,
                         const DGFunctor& g);

/* (x,y) -> (y,x), f (x) g -> (-1)^(deg(f) deg(g)) g (x) f. Pass the tensor
 * category in both factor orders. */
DGFunctor swap_functor(const TensorCat& ab, const TensorCat& ba);

/* point (x) A -> A. The left factor must be a point: one object whose only
 * hom is the span of its identity in degree 0. */
DGFunctor left_unit_functor(const TensorCat& ka);

} // namespace dgcalc
