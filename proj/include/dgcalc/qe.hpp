#pragma once
#include <string>
#include <vector>

#include "dgcalc/functor.hpp"
#include "dgcalc/h0.hpp"

namespace dgcalc {

/* Induced map on degree-n cohomology classes for one source hom pair:
 * columns express the images of the source classes over the target classes.
 * n must sit strictly inside both windows. */
Matrix induced_cohomology_map(const DGFunctor& f, std::size_t s, std::size_t t, int n);

struct HomIsoReport {
  bool iso = true;
  std::size_t checked = 0; // (pair, degree) slots compared
  std::vector<std::string> failures;
};
/* Compares classes on every source hom pair at every degree strictly inside
 * the intersection of the two windows. Refuses truncated tabulations. */
HomIsoReport hom_iso_report(const DGFunctor& f);

struct QEResult {
  bool pass = false;
  std::vector<std::string> failures;
};
/* Strict: every induced class map is an isomorphism and every target object
 * has a YES equivalence witness to some image object. An unresolved witness
 * search fails the strict check. Refuses truncated tabulations. */
QEResult is_quasi_equivalence(const DGFunctor& f);

struct ProxyResult {
  Trilean verdict = Trilean::Inconclusive;
  std::vector<std::string> notes;
};
/* Labeled stand-in for the strict check: class maps must all be
 * isomorphisms, and every target object must be contractible or
 * YES-equivalent to an image object. A definite failure gives NO; an
 * unresolved witness search gives INCONCLUSIVE. Refuses truncated
 * tabulations. */
ProxyResult morita_proxy(const DGFunctor& f);

} // namespace dgcalc
