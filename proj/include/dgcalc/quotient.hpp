#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "dgcalc/functor.hpp"
#include "dgcalc/tab.hpp"

namespace dgcalc {

/* Alternating word f_k . h(z_k) . f_(k-1) ... h(z_1) . f_0 over a base
 * category: mandatory basis-morphism slots separated by the adjoined
 * contracting endomorphisms h(z), one per listed object z.  Read right to
 * left: f_0 leaves the source, each h(z_i) is an endomorphism of z_i, and
 * f_k lands in the target.  degs/idx give each f slot's degree and basis
 * index; the word's degree is sum(degs) - zs.size(). */
struct QWord {
  std::vector<std::size_t> zs;
  std::vector<int> degs;
  std::vector<std::size_t> idx;
};

/* Category with the listed objects made contractible: a degree -1
 * endomorphism h(z) with d h(z) = id is adjoined for every z, and hom
 * slots get the alternating-word bases above, ordered by h count first.
 * Differential: termwise, with d h = id merging the two neighbouring f
 * slots; composition: concatenation, expanding the junction product.
 * The base must be complete with degree bound at most 0; the result is
 * then complete on the same window, since no in-window word ever needs an
 * out-of-window factor. */
struct QuotientCat {
  DGCategoryTab cat;
  DGCategoryTab base;
  std::vector<std::size_t> contracted;
  std::map<std::tuple<std::size_t, std::size_t, int>, std::vector<QWord>> words;
};

QuotientCat drinfeld_quotient(const DGCategoryTab& base,
                              const std::vector<std::size_t>& contracted);

/* The identity-on-objects functor sending each base morphism to its
 * h-free word. */
DGFunctor quotient_eta(const QuotientCat& q);

/* The adjoined contracting endomorphism of z, as a morphism of the
 * quotient: id . h(z) . id expanded over the identity's coordinates. */
Morphism quotient_h(const QuotientCat& q, std::size_t z);

/* The functor between quotients induced by a base functor that sends
 * contracted objects to contracted objects: words map slotwise, h(z) to
 * h(F z). */
DGFunctor quotient_induced_functor(const QuotientCat& qa, const QuotientCat& qb,
                                   const DGFunctor& f);

}  // namespace dgcalc
