#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "dgcalc/functor.hpp"
#include "dgcalc/tab.hpp"

namespace dgcalc {

/* Is d(h) = f - g, with h one degree below the parallel pair f, g? */
bool verify_homotopy(const DGCategoryTab& t, const Morphism& f, const Morphism& g,
                     const Morphism& h);

/* Exact solve for such an h; nullopt when none exists.  Needs degree
 * deg(f) - 1 inside the window. */
std::optional<Morphism> find_homotopy(const DGCategoryTab& t, const Morphism& f,
                                      const Morphism& g);

bool is_null_homotopic(const DGCategoryTab& t, const Morphism& f);

/* Homotopy between two functors F, G : A -> B: a degree -1 family sending
 * each morphism x : s -> t of degree n to h(x) : F s -> G t of degree n-1,
 * vanishing on identities, a derivation over composition,
 *   h(x.y) = h(x) . F(y) + (-1)^n G(x) . h(y),
 * and with defect equation  d h(x) + h(d x) = F(x) - G(x).
 * Stored as one matrix per hom slot; slots whose image degree falls below
 * the window cannot be represented and are absent. */
struct FunctorHomotopy {
  DGFunctor f, g;
  std::map<std::tuple<std::size_t, std::size_t, int>, Matrix> comp;

  Morphism apply(const Morphism& m) const;
};

/* Sweep the three laws over basis elements and available table entries;
 * equations that leave the window are skipped.  Empty means verified. */
std::vector<std::string> check_functor_homotopy(const FunctorHomotopy& h);

/* Joint linear solve for a functor homotopy, with the images of the
 * generators as unknowns; needs a presented source category.  nullopt when
 * the system has no solution. */
std::optional<FunctorHomotopy> find_functor_homotopy(const DGFunctor& f, const DGFunctor& g);

}  // namespace dgcalc
