#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "dgcalc/functor.hpp"
#include "dgcalc/tab.hpp"

namespace dgcalc {

/* DG category of functors A -> B, restricted to an explicit roster.
 *
 * A degree-n morphism F -> G is a strictly graded-natural family
 * (phi_X : F X -> G X)_X: for every basis f : X -> Y of degree m,
 *   phi_Y . F(f) = (-1)^(n m) G(f) . phi_X.
 * Each hom slot is tabulated as the joint kernel of those constraints
 * inside the direct sum of the component slots; differential and
 * composition act componentwise (no extra signs).  Constraints that land
 * outside the window on a possibly-nonzero slot cannot be imposed; such
 * slots are kept but the whole category is marked truncated. */
struct FunCat {
  DGCategoryTab cat;
  DGCategoryTab a, b;
  std::vector<DGFunctor> roster;
  /* per (s, t, n): chosen kernel vectors over the stacked component slots */
  std::map<std::tuple<std::size_t, std::size_t, int>, std::vector<Vec>> basis;

  std::optional<std::size_t> find_functor(const DGFunctor& f) const;
  /* starting offset of each component block, then the total dimension */
  std::vector<std::size_t> offsets(std::size_t s, std::size_t t, int n) const;
};

FunCat fun_dg(const DGCategoryTab& a, const DGCategoryTab& b,
              const std::vector<DGFunctor>& roster);

/* Component phi_x of a functor-category morphism, as a morphism of B. */
Morphism nat_component(const FunCat& fn, const Morphism& m, std::size_t x);

/* Assemble a functor-category morphism from components (one per object of
 * A, in object order); throws PreconditionError when the family is not
 * strictly graded-natural within the window. */
Morphism nat_from_components(const FunCat& fn, std::size_t s, std::size_t t, int n,
                             const std::vector<Morphism>& parts);

/* Whiskering H . (-) : Fun(A,B) -> Fun(A,B') for H : B -> B'; every image
 * functor must appear in the target roster. */
DGFunctor fun_postcompose(const FunCat& src, const FunCat& tgt, const DGFunctor& h);

/* Restriction (-) . H : Fun(A,B) -> Fun(A',B) for H : A' -> A. */
DGFunctor fun_restrict(const FunCat& src, const FunCat& tgt, const DGFunctor& h);

}  // namespace dgcalc
