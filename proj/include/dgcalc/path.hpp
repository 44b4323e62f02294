#pragma once

#include <optional>
#include <vector>

#include "dgcalc/functor.hpp"
#include "dgcalc/tab.hpp"

namespace dgcalc {

/* One object of a path category over a base category B: a pair of base
 * objects joined by a degree-0 cocycle that is invertible up to homotopy. */
struct PathTriple {
  std::size_t x = 0;
  std::size_t y = 0;
  Morphism f;
};

/* Path category over `base`, restricted to the listed triples.
 *
 * A degree-n morphism (x,y,f) -> (x',y',f') is a block vector (a,b,h) with
 * a : x -> x' and b : y -> y' of degree n and h : x -> y' of degree n-1,
 * with
 *   d(a,b,h)   = (da, db, dh + (-1)^n (f'.a - b.f))
 *   (a,b,h).(a',b',h') = (a.a', b.b', (-1)^m h.a' + b.h')   (m = deg of the
 *                                                            second factor)
 *   id = (id, id, 0).
 * The h block sits one degree lower, so the path window is
 * [base.lo + 1, base.hi] and the degree bound rises by one.
 *
 * For every diagonal triple (x,x,id) and every triple (x,y,f) sharing its
 * source, the morphism (id, f, 0) is registered as an equivalence candidate.
 */
struct PathCat {
  DGCategoryTab cat;
  DGCategoryTab base;
  std::vector<PathTriple> triples;

  std::optional<std::size_t> find_triple(std::size_t x, std::size_t y, const Morphism& f) const;
};

PathCat path_cat(const DGCategoryTab& base, const std::vector<PathTriple>& triples);

/* Roster of one triple (x, x, id) for every object of the base. */
std::vector<PathTriple> path_diagonal(const DGCategoryTab& base);

/* The three component blocks of a path morphism, as base morphisms. */
Morphism path_component_a(const PathCat& pc, const Morphism& m);
Morphism path_component_b(const PathCat& pc, const Morphism& m);
Morphism path_component_h(const PathCat& pc, const Morphism& m);

/* Assemble a path morphism from its blocks (degrees n, n, n-1). */
Morphism path_build(const PathCat& pc, std::size_t s, std::size_t t, const Morphism& a,
                    const Morphism& b, const Morphism& h);

/* Projection functors (a,b,h) |-> a and (a,b,h) |-> b, and the diagonal
 * embedding a |-> (a,a,0).  The path category is one degree shallower than
 * the base, so the projections target — and the embedding starts from —
 * the base restricted to the path window; both composites p . i are then
 * literally the identity functor there. */
DGFunctor path_p0(const PathCat& pc);
DGFunctor path_p1(const PathCat& pc);
DGFunctor path_i(const PathCat& pc);

/* For a triple whose endpoints are both contractible, a degree -1
 * endomorphism (c_x, c_y, c_y.f.c_x) whose differential is the identity of
 * the triple; nullopt when either endpoint has no contraction.  Needs the
 * base window to reach two degrees below zero. */
std::optional<Morphism> path_contraction(const PathCat& pc, std::size_t i);

/* Certify per hom slot and degree that the joint projection onto the (a,b)
 * blocks hits every vector; returns human-readable failure notes. */
std::vector<std::string> path_projection_failures(const PathCat& pc);

}  // namespace dgcalc
