#include "dgcalc/qe.hpp"

namespace dgcalc {

namespace {

void refuse_truncated(const DGFunctor& f, const char* what) {
  if (f.source().status() == Tabulation::Truncated ||
      f.target().status() == Tabulation::Truncated)
    throw PreconditionError(std::string(what) +
                            ": refusing to certify from a truncated tabulation");
}

} // namespace

Matrix induced_cohomology_map(const DGFunctor& f, std::size_t s, std::size_t t, int n) {
  const DGCategoryTab& a = f.source();
  const DGCategoryTab& b = f.target();
  auto coh_a = a.hom_complex(s, t).cohomology(n);
  SubquotientBasis cls_b =
      b.hom_complex(f.object_image(s), f.object_image(t)).class_basis(n);
  const Matrix& m = f.hom_matrix(s, t, n);
  std::vector<Vec> cols;
  cols.reserve(coh_a.representatives.size());
  for (const Vec& rep : coh_a.representatives) cols.push_back(cls_b.coords(m.apply(rep)));
  return Matrix::from_columns(a.field(), cls_b.dim(), cols);
}

HomIsoReport hom_iso_report(const DGFunctor& f) {
  refuse_truncated(f, "hom_iso_report");
  HomIsoReport rep;
  const DGCategoryTab& a = f.source();
  const Window w = Window::intersect(a.window(), f.target().window());
  for (std::size_t s = 0; s < a.num_objects(); ++s)
    for (std::size_t t = 0; t < a.num_objects(); ++t)
      for (int n = w.lo + 1; n <= w.hi - 1; ++n) {
        Matrix m = induced_cohomology_map(f, s, t, n);
        ++rep.checked;
        if (m.rows() != m.cols() || rank(m) != m.rows()) {
          rep.iso = false;
          rep.failures.push_back(
              "classes at degree " + std::to_string(n) + " on Hom(" + a.object_label(s) + ", " +
              a.object_label(t) + "): " + std::to_string(m.cols()) + " -> " +
              std::to_string(m.rows()) + " of rank " + std::to_string(rank(m)));
        }
      }
  return rep;
}

QEResult is_quasi_equivalence(const DGFunctor& f) {
  refuse_truncated(f, "is_quasi_equivalence");
  QEResult out;
  HomIsoReport hom = hom_iso_report(f);
  out.failures = std::move(hom.failures);

  const DGCategoryTab& a = f.source();
  const DGCategoryTab& b = f.target();
  for (std::size_t y = 0; y < b.num_objects(); ++y) {
    bool found = false, unresolved = false;
    for (std::size_t x = 0; x < a.num_objects() && !found; ++x) {
      EquivalenceVerdict v = is_homotopy_equivalent(b, f.object_image(x), y);
      if (v.verdict == Trilean::Yes) found = true;
      if (v.verdict == Trilean::Inconclusive) unresolved = true;
    }
    if (!found)
      out.failures.push_back("object " + b.object_label(y) +
                             (unresolved ? ": equivalence to an image object unresolved"
                                         : ": not equivalent to any image object"));
  }
  out.pass = out.failures.empty();
  return out;
}

ProxyResult morita_proxy(const DGFunctor& f) {
  refuse_truncated(f, "morita_proxy");
  ProxyResult out;
  bool definite_fail = false, unresolved = false;

  HomIsoReport hom = hom_iso_report(f);
  if (!hom.iso) {
    definite_fail = true;
    for (std::string& s : hom.failures) out.notes.push_back("class map not iso: " + s);
  }

  const DGCategoryTab& a = f.source();
  const DGCategoryTab& b = f.target();
  for (std::size_t y = 0; y < b.num_objects(); ++y) {
    if (is_contractible(b, y)) continue;
    bool found = false, thisUnresolved = false;
    for (std::size_t x = 0; x < a.num_objects() && !found; ++x) {
      EquivalenceVerdict v = is_homotopy_equivalent(b, f.object_image(x), y);
      if (v.verdict == Trilean::Yes) found = true;
      if (v.verdict == Trilean::Inconclusive) thisUnresolved = true;
    }
    if (found) continue;
    if (thisUnresolved) {
      unresolved = true;
      out.notes.push_back("object " + b.object_label(y) + ": witness search inconclusive");
    } else {
      definite_fail = true;
      out.notes.push_back("object " + b.object_label(y) +
                          ": not contractible and ruled out against every image object");
    }
  }

  out.verdict = definite_fail ? Trilean::No
                              : (unresolved ? Trilean::Inconclusive : Trilean::Yes);
  return out;
}

} // namespace dgcalc
