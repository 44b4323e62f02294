#pragma once
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "dgcalc/complex.hpp"

namespace dgcalc {

/* COMPLETE: the tabulated bases, differentials and tables are exact within
 * the window. TRUNCATED: a word cap cut the enumeration; results are an
 * approximation and equivalence checks must refuse to certify from them. */
enum class Tabulation { Complete, Truncated };

/* A morphism of a tabulated category: coordinates over the ordered basis of
 * Hom(src, tgt) in one degree. */
struct Morphism {
  std::size_t src = 0, tgt = 0;
  int degree = 0;
  Vec coords;
};

Morphism morphism_add(const Morphism& a, const Morphism& b);
Morphism morphism_scale(const Scalar& c, const Morphism& a);
bool morphism_eq(const Morphism& a, const Morphism& b);
bool morphism_is_zero(const Morphism& a);

struct PresentationLink; // defined alongside DGPresentation

/* Fully tabulated DG category over a degree window: labeled hom bases per
 * (source, target, degree), differentials, identity coordinates and bilinear
 * composition tables. Constructions (tensor, path objects, functor
 * categories, quotients, module categories) all produce this one shape, so
 * every checker runs uniformly on top of it.
 *
 * Composition entries can be individually unavailable in TRUNCATED
 * tabulations (a word cap cut them off); touching one is a loud CapError. */
class DGCategoryTab {
 public:
  DGCategoryTab(Field f, Window w);

  Field field() const { return f_; }
  Window window() const { return w_; }
  Tabulation status() const { return status_; }
  void set_status(Tabulation s) { status_ = s; }
  /* Certified upper bound: all hom degrees above this are zero, including
   * outside the window. Constructions use it to size their own windows. */
  int sup_bound() const { return sup_; }
  void set_sup_bound(int s) { sup_ = s; }

  std::size_t add_object(const std::string& label);
  std::size_t num_objects() const { return objects_.size(); }
  const std::string& object_label(std::size_t x) const;
  const std::vector<std::string>& objects() const { return objects_; }
  std::optional<std::size_t> find_object(const std::string& label) const;

  void set_hom_basis(std::size_t s, std::size_t t, int n, std::vector<std::string> labels);
  std::size_t dim(std::size_t s, std::size_t t, int n) const;
  const std::vector<std::string>& hom_labels(std::size_t s, std::size_t t, int n) const;
  std::size_t total_dim() const;

  void set_diff(std::size_t s, std::size_t t, int n, Matrix m);
  const Matrix& diff_matrix(std::size_t s, std::size_t t, int n) const;

  void set_identity(std::size_t x, Vec coords);
  Morphism identity(std::size_t x) const;

  void set_composition_entry(std::size_t s, std::size_t m, std::size_t t, int p, int q,
                             std::size_t i, std::size_t j, std::optional<Vec> value);
  bool composition_available(std::size_t s, std::size_t m, std::size_t t, int p, int q,
                             std::size_t i, std::size_t j) const;

  Morphism zero_morphism(std::size_t s, std::size_t t, int n) const;
  Morphism basis_morphism(std::size_t s, std::size_t t, int n, std::size_t i) const;
  /* f . g with g applied first; needs f.src == g.tgt. */
  Morphism compose(const Morphism& f, const Morphism& g) const;
  Morphism differential(const Morphism& f) const;

  /* Matrix of g |-> f . g on Hom(s, f.src)[q], and of f |-> f . g on
   * Hom(g.tgt, t)[p]; the workhorses behind every linear solve. */
  Matrix left_compose_matrix(const Morphism& f, std::size_t s, int q) const;
  Matrix right_compose_matrix(const Morphism& g, std::size_t t, int p) const;

  CochainComplex hom_complex(std::size_t s, std::size_t t) const;

  /* Construction-supplied homotopy-equivalence candidates, consulted first
   * by the equivalence search. */
  void register_equiv(const Morphism& m) { registered_.push_back(m); }
  const std::vector<Morphism>& registered_equivs() const { return registered_; }

  void set_presentation(std::shared_ptr<const PresentationLink> p) { pres_ = std::move(p); }
  const std::shared_ptr<const PresentationLink>& presentation() const { return pres_; }

  /* Mathematical content (labels, bases, differentials, identities, tables);
   * registered candidates and presentation links are auxiliary. */
  bool operator==(const DGCategoryTab& o) const;

  void check_morphism(const Morphism& m, const std::string& what) const;

 private:
  using HomKey = std::tuple<std::size_t, std::size_t, int>;
  using CompKey = std::tuple<std::size_t, std::size_t, std::size_t, int, int>;

  const std::optional<Vec>& comp_entry(std::size_t s, std::size_t m, std::size_t t, int p, int q,
                                       std::size_t i, std::size_t j) const;

  Field f_;
  Window w_;
  Tabulation status_ = Tabulation::Complete;
  int sup_ = 0;
  std::vector<std::string> objects_;
  std::map<std::string, std::size_t> object_index_;
  std::map<HomKey, std::vector<std::string>> hom_;
  mutable std::map<HomKey, Matrix> diff_; // lazily filled with zero matrices
  std::map<std::size_t, Vec> identity_;
  std::map<CompKey, std::vector<std::vector<std::optional<Vec>>>> comp_;
  std::vector<Morphism> registered_;
  std::shared_ptr<const PresentationLink> pres_;
  static const std::optional<Vec> kUnset;
};

struct AxiomViolation {
  std::string kind;  // "identity-missing", "identity-not-closed", "d-squared", "unit", "leibniz", "assoc"
  std::string where; // object/degree/basis-label coordinates of the failure
};

/* Full sweep of the DG category axioms on the tabulated data: d^2 = 0,
 * closed identities, unit laws, the Leibniz rule on all composable basis
 * pairs and associativity on all composable basis triples, wherever every
 * needed piece lies inside the window and the tables. */
std::vector<AxiomViolation> check_axioms(const DGCategoryTab& t);

DGCategoryTab full_subcategory(const DGCategoryTab& t, const std::vector<std::size_t>& objs);

/* The same category seen through a smaller window (which must sit inside
 * the old one and contain 0). Completeness within the smaller window is
 * inherited; presentation links are dropped. */
DGCategoryTab window_restrict(const DGCategoryTab& t, Window w);

/* Side-by-side union with no cross homs; colliding labels on the right get a
 * "#2" suffix. The right tab must share field and window. */
DGCategoryTab disjoint_union(const DGCategoryTab& a, const DGCategoryTab& b);

} // namespace dgcalc
