#pragma once
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "dgcalc/tab.hpp"

namespace dgcalc {

/* A functor between tabulated categories: an object map plus one matrix per
 * hom slot and degree sending source basis coordinates to target
 * coordinates. Holds its endpoint categories by value, so a functor is a
 * self-contained piece of data; category equality is semantic throughout.
 *
 * Unset hom matrices read as zero. check() sweeps the functor laws and
 * returns human-readable violations; builders below validate and throw. */
class DGFunctor {
 public:
  DGFunctor(DGCategoryTab src, DGCategoryTab tgt);

  const DGCategoryTab& source() const { return src_; }
  const DGCategoryTab& target() const { return tgt_; }

  void set_object_image(std::size_t x, std::size_t fx);
  std::size_t object_image(std::size_t x) const;

  void set_hom_matrix(std::size_t s, std::size_t t, int n, Matrix m);
  /* Rows index the target slot Hom(F s, F t)^n, columns the source slot. */
  const Matrix& hom_matrix(std::size_t s, std::size_t t, int n) const;

  Morphism apply(const Morphism& m) const;

  /* Functor-law sweep: total object map, identities to identities, squares
   * with the differentials, preserves every composable basis product whose
   * table entries are available on both sides. */
  std::vector<std::string> check() const;

  bool operator==(const DGFunctor& o) const;

 private:
  using HomKey = std::tuple<std::size_t, std::size_t, int>;
  DGCategoryTab src_, tgt_;
  std::vector<std::size_t> obj_;
  mutable std::map<HomKey, Matrix> hom_; // lazily filled with zero matrices
};

DGFunctor identity_functor(const DGCategoryTab& a);

/* g after f; f's target must equal g's source. */
DGFunctor compose_functors(const DGFunctor& g, const DGFunctor& f);

/* The full subcategory on `objs` included back into `big`. */
DGFunctor inclusion_functor(const DGCategoryTab& big, const std::vector<std::size_t>& objs);

/* Functor out of a presented category, from images of the objects and the
 * generators. Object images are keyed by source object label; generator
 * images must match endpoints and degree. Checks that relations map to zero
 * and that generator differentials are preserved, then expands every basis
 * word; throws StructuralError when the data is not a functor. */
DGFunctor functor_from_generators(const DGCategoryTab& a, const DGCategoryTab& b,
                                  const std::map<std::string, std::size_t>& obj_images,
                                  const std::map<std::string, Morphism>& gen_images);

} // namespace dgcalc
