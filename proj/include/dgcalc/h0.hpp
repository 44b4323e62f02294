#pragma once
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgcalc/tab.hpp"

namespace dgcalc {

enum class Trilean { Yes, No, Inconclusive };
std::string trilean_str(Trilean t);

/* Snapshot of the degree-0 cohomology category: class counts and chosen
 * cocycle representatives per hom pair. Needs degrees -1..1 in the window. */
struct H0Category {
  Field f = Field::rationals();
  std::vector<std::string> objects;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Vec>> reps;

  std::size_t dim(std::size_t s, std::size_t t) const;
};
H0Category h0(const DGCategoryTab& t);

/* Witness c with d(c) = identity, when one exists. Needs degrees -1..0. */
std::optional<Morphism> contraction(const DGCategoryTab& t, std::size_t x);
bool is_contractible(const DGCategoryTab& t, std::size_t x);

/* Does the class of the degree-0 cocycle f have a two-sided inverse in the
 * degree-0 cohomology category? Decided exactly by one joint linear solve:
 * g with d(g) = 0 and both f.g - id and g.f - id exact. */
bool is_invertible_h0(const DGCategoryTab& t, const Morphism& f);

struct EquivalenceVerdict {
  Trilean verdict = Trilean::Inconclusive;
  std::string detail;
  std::optional<Morphism> witness; // degree-0 cocycle with invertible class
};

/* Are x and y isomorphic in degree-0 cohomology? YES comes with a witness
 * (registered candidates first, then representatives and their +-1 pair
 * combinations, each settled by the exact invertibility solve). NO is exact:
 * one hom direction has no classes at all while the objects are not both
 * contractible. Anything else is INCONCLUSIVE. */
EquivalenceVerdict is_homotopy_equivalent(const DGCategoryTab& t, std::size_t x, std::size_t y);

} // namespace dgcalc
