#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dgcalc/fiber.hpp"
#include "dgcalc/fun_cat.hpp"
#include "dgcalc/qe.hpp"
#include "dgcalc/quotient.hpp"
#include "dgcalc/tensor.hpp"

namespace dgcalc {

/* A category together with a full subcategory, held as the ambient
 * tabulation plus the sorted list of object indices spanning the marked
 * part.  A morphism of pairs is a functor of the ambients carrying marked
 * objects to marked objects. */
struct LocalizationPair {
  DGCategoryTab cat;
  std::vector<std::size_t> sub;

  bool in_sub(std::size_t x) const;
  /* The marked part as its own tabulation; object k is sub[k]. */
  DGCategoryTab sub_cat() const;
};

/* Validates the indices, sorts and deduplicates them. */
LocalizationPair localization_pair(DGCategoryTab cat, std::vector<std::size_t> sub);

/* One object "k" with only its identity, nothing marked: the tensor unit. */
LocalizationPair unit_pair(Field f, Window w);

/* The pair with empty marked part over a given ambient category. */
LocalizationPair with_empty_sub(const DGCategoryTab& a);

/* Forgets the marked part. */
const DGCategoryTab& ambient(const LocalizationPair& a);

/* The object images of a functor, marked inside its target. */
LocalizationPair image_pair(const DGFunctor& g);

/* Why f fails to be a morphism of pairs a -> b; empty when it is one. */
std::vector<std::string> pair_functor_failures(const LocalizationPair& a,
                                               const LocalizationPair& b,
                                               const DGFunctor& f);

/* Tensor of pairs: ambient tensor of the ambients, with (x, y) marked as
 * soon as either factor is marked. */
struct PairTensor {
  TensorCat ten;
  LocalizationPair pair;
};
PairTensor lp_tensor(const LocalizationPair& a, const LocalizationPair& b);

/* Hom of pairs a -> b over a roster of pair functors between the ambients.
 *
 * outer  = functors A1 -> B1 on the roster;
 * corner = the restricted-corestricted functors A0 -> B0;
 * mixed  = the common restrictions A0 -> B1;
 * post composes a corner functor with the inclusion B0 -> B1, restr cuts an
 * outer functor down along A0 -> A1, and fiber is their strict pullback: an
 * outer natural family together with a corner family restricting to the
 * same mixed family.  corner_of/mixed_of give each outer roster entry's
 * derived functor's index in the other two rosters.  The marked part of the
 * resulting pair consists of the roster functors landing entirely in B0. */
struct PairHom {
  FunCat outer, corner, mixed;
  DGFunctor post, restr;
  FiberCat fiber;
  std::vector<std::size_t> corner_of, mixed_of;
  LocalizationPair pair;
};
PairHom lp_hom(const LocalizationPair& a, const LocalizationPair& b,
               const std::vector<DGFunctor>& roster);

/* Moves a functor phi : tensor(a, b) -> c of pairs across the
 * tensor-hom correspondence.  The hom pair hom(b, c) is built on the roster
 * of partial applications x |-> phi(x (x) -), deduplicated in object order,
 * and `name` sends x to that functor and a morphism f to the natural family
 * phi(f (x) id); both are exact, no signs appear.  untranspose inverts the
 * move: a functor into a hom pair flattens to phi(f (x) g) =
 * name(f)_(y') . F_x(g); the two round trips are exact equalities. */
struct PairTranspose {
  PairHom hom;
  DGFunctor name;
};
PairTranspose transpose(const LocalizationPair& a, const LocalizationPair& b,
                        const LocalizationPair& c, const PairTensor& ab,
                        const DGFunctor& phi);
DGFunctor untranspose(const PairTensor& ab, const PairHom& hom, const DGFunctor& name);

/* Contracts the marked part: the ambient becomes the quotient by the
 * marked objects, which stay marked (now contractible) in the result.  The
 * unit of the construction is quotient_eta on the ambient, a morphism of
 * pairs a -> q_functor(a).pair. */
struct QPair {
  QuotientCat q;
  LocalizationPair pair;
};
QPair q_functor(const LocalizationPair& a);

/* Stand-in verdict for f : a -> b inverting after both marked parts are
 * contracted: morita_proxy on the functor induced between the quotients.
 * The notes say which stand-in decided.  Refuses non-pair-morphisms. */
ProxyResult is_q_weak_equivalence(const LocalizationPair& a, const LocalizationPair& b,
                                  const DGFunctor& f);

/* Shape check for a pair whose marked part is exactly the contractible
 * objects: every marked object contractible, every contractible ambient
 * object marked, and no unmarked object YES-equivalent to a marked one.
 * Needs degrees -1..1 in the window; refuses truncated tabulations.  The
 * notes always record that Morita fibrancy of the component categories is
 * not checked. */
struct FibrantFormReport {
  bool pass = false;
  std::vector<std::string> notes;
};
FibrantFormReport check_q_fibrant_form(const LocalizationPair& a);

}  // namespace dgcalc
