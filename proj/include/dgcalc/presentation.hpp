#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgcalc/tab.hpp"

namespace dgcalc {

/* Composable chain of generator names, written outermost first: the word
 * {f, g, h} means f after g after h. The empty chain is the identity of
 * `obj`; for nonempty chains `obj` is ignored. Ordered by (length, then
 * name-lexicographic) so that shorter, earlier-named words are preferred as
 * normal forms. */
struct PWord {
  std::string obj;
  std::vector<std::string> gens;

  bool is_identity() const { return gens.empty(); }
  std::string label() const;

  bool operator==(const PWord& o) const { return gens == o.gens && (!gens.empty() || obj == o.obj); }
  bool operator<(const PWord& o) const;
};

/* Finite linear combination of words with nonzero coefficients. */
using PComb = std::map<PWord, Scalar>;

PWord pw_id(std::string obj);
PWord pw(std::vector<std::string> gens);
/* c += coeff * w, dropping the term when it cancels to zero. */
void pc_add(PComb& c, const Scalar& coeff, const PWord& w);
PComb pc_term(const Scalar& coeff, const PWord& w);
std::string pcomb_str(const PComb& c);

struct PGen {
  std::string name;
  std::string src, tgt;
  int degree = 0;
};

/* A DG category by generators and relations: finitely many objects,
 * morphism generators with degrees and differentials, and homogeneous
 * combinations of words declared to vanish. This is the hand-written input
 * shape; tabulate() turns it into a DGCategoryTab. */
class DGPresentation {
 public:
  explicit DGPresentation(Field f) : f_(f) {}

  Field field() const { return f_; }

  void add_object(const std::string& label);
  const std::vector<std::string>& objects() const { return objects_; }
  bool has_object(const std::string& label) const;

  void add_generator(const std::string& name, const std::string& src, const std::string& tgt,
                     int degree);
  const std::vector<PGen>& generators() const { return gens_; }
  bool has_generator(const std::string& name) const;
  const PGen& generator(const std::string& name) const;

  /* Differential of a generator; unset means zero. */
  void set_gen_diff(const std::string& name, PComb value);
  const PComb& gen_diff(const std::string& name) const;

  /* Declares the combination equal to zero. Must be homogeneous. */
  void add_relation(PComb r);
  const std::vector<PComb>& relations() const { return rels_; }

  struct Signature {
    std::string src, tgt;
    int degree = 0;
    bool operator==(const Signature&) const = default;
  };
  /* Endpoints and degree of a word; throws StructuralError when the chain
   * does not compose or mentions unknown names. */
  Signature signature(const PWord& w) const;
  /* Common signature of a combination; nullopt for the empty combination,
   * StructuralError when terms disagree. */
  std::optional<Signature> signature(const PComb& c) const;

  /* Structural validation of the whole presentation: identifier hygiene,
   * chains compose, generator differentials land in degree + 1 with matching
   * endpoints, relations are homogeneous and nonempty. */
  void validate() const;

 private:
  Field f_;
  std::vector<std::string> objects_;
  std::map<std::string, std::size_t> object_index_;
  std::vector<PGen> gens_;
  std::map<std::string, std::size_t> gen_index_;
  std::map<std::string, PComb> gdiff_;
  std::vector<PComb> rels_;
  static const PComb kZero;
};

/* Carried by tabulated categories that came from a presentation: the input
 * data, the cap used, and each generator's value over the tabulated bases.
 * Later constructions use it to build functors from generator images and to
 * name quotient data. */
struct PresentationLink {
  DGPresentation pres;
  int cap = 0;
  std::map<std::string, Morphism> gen_values;
  /* Chosen normal-form word behind each tabulated basis element. */
  std::map<std::tuple<std::size_t, std::size_t, int>, std::vector<PWord>> basis_words;
};

/* Expands the presentation over the window into a fully tabulated category.
 *
 * Enumerates all composable words of length <= cap, imposes every relation
 * consequence u.r.v whose terms still fit under the cap, picks canonical
 * normal forms (shortest, then name-lexicographic) per hom slot and degree,
 * and assembles differentials (Leibniz) and composition tables
 * (concatenate, then rewrite down to normal forms).
 *
 * The result is COMPLETE when (a) every generator has degree <= 0, (b) every
 * chosen normal form is shorter than the cap, and (c) every relation term
 * fits under the cap; then the tabulated data is exact in the window and the
 * degree bound is 0. Anything else is TRUNCATED: bases and tables are
 * cap-approximations, and table entries whose rewriting gets stuck are left
 * unavailable. For COMPLETE results the relation span is also verified to be
 * closed under the differential (a presentation whose relations break the
 * differential is rejected loudly); truncated results defer to the axiom
 * sweep.
 *
 * Throws WindowError when 0 is outside the window or a generator (or its
 * differential) cannot be represented inside it, and CapError when the word
 * count explodes. */
DGCategoryTab tabulate(const DGPresentation& p, Window w, int cap);

/* Value of a word (identity, or generator values composed right to left)
 * over any tabulated category; `vals` maps generator names to morphisms and
 * `objs` maps object labels to object indices. */
Morphism eval_word(const DGCategoryTab& t, const std::map<std::string, std::size_t>& objs,
                   const std::map<std::string, Morphism>& vals, const PWord& w);
Morphism eval_comb(const DGCategoryTab& t, const std::map<std::string, std::size_t>& objs,
                   const std::map<std::string, Morphism>& vals, const PComb& c);

} // namespace dgcalc
