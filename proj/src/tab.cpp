#include "dgcalc/tab.hpp"

#include <set>
#include <sstream>

namespace dgcalc {

const std::optional<Vec> DGCategoryTab::kUnset = std::nullopt;

Morphism morphism_add(const Morphism& a, const Morphism& b) {
  if (a.src != b.src || a.tgt != b.tgt || a.degree != b.degree)
    throw StructuralError("morphism sum across different hom slots");
  return Morphism{a.src, a.tgt, a.degree, vec_add(a.coords, b.coords)};
}

Morphism morphism_scale(const Scalar& c, const Morphism& a) {
  return Morphism{a.src, a.tgt, a.degree, vec_scale(c, a.coords)};
}

bool morphism_eq(const Morphism& a, const Morphism& b) {
  return a.src == b.src && a.tgt == b.tgt && a.degree == b.degree && vec_eq(a.coords, b.coords);
}

bool morphism_is_zero(const Morphism& a) { return vec_is_zero(a.coords); }

DGCategoryTab::DGCategoryTab(Field f, Window w) : f_(f), w_(w) {
  if (!w.contains(0)) throw StructuralError("tabulation window must contain degree 0");
}

std::size_t DGCategoryTab::add_object(const std::string& label) {
  if (object_index_.count(label)) throw StructuralError("duplicate object label '" + label + "'");
  objects_.push_back(label);
  object_index_[label] = objects_.size() - 1;
  return objects_.size() - 1;
}

const std::string& DGCategoryTab::object_label(std::size_t x) const {
  if (x >= objects_.size()) throw StructuralError("object index out of range");
  return objects_[x];
}

std::optional<std::size_t> DGCategoryTab::find_object(const std::string& label) const {
  auto it = object_index_.find(label);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

void DGCategoryTab::set_hom_basis(std::size_t s, std::size_t t, int n,
                                  std::vector<std::string> labels) {
  object_label(s);
  object_label(t);
  w_.require(n, "set_hom_basis");
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second)
      throw StructuralError("duplicate basis label '" + l + "' in Hom(" + objects_[s] + "," +
                            objects_[t] + ") degree " + std::to_string(n));
  hom_[{s, t, n}] = std::move(labels);
}

std::size_t DGCategoryTab::dim(std::size_t s, std::size_t t, int n) const {
  object_label(s);
  object_label(t);
  w_.require(n, "hom dim");
  auto it = hom_.find({s, t, n});
  return it == hom_.end() ? 0 : it->second.size();
}

const std::vector<std::string>& DGCategoryTab::hom_labels(std::size_t s, std::size_t t,
                                                          int n) const {
  static const std::vector<std::string> empty;
  object_label(s);
  object_label(t);
  w_.require(n, "hom labels");
  auto it = hom_.find({s, t, n});
  return it == hom_.end() ? empty : it->second;
}

std::size_t DGCategoryTab::total_dim() const {
  std::size_t d = 0;
  for (const auto& [k, v] : hom_) d += v.size();
  return d;
}

void DGCategoryTab::set_diff(std::size_t s, std::size_t t, int n, Matrix m) {
  w_.require(n, "set_diff");
  w_.require(n + 1, "set_diff target");
  if (m.rows() != dim(s, t, n + 1) || m.cols() != dim(s, t, n))
    throw StructuralError("differential shape mismatch in Hom(" + objects_[s] + "," + objects_[t] +
                          ") at degree " + std::to_string(n));
  diff_.insert_or_assign(HomKey{s, t, n}, std::move(m));
}

const Matrix& DGCategoryTab::diff_matrix(std::size_t s, std::size_t t, int n) const {
  w_.require(n, "diff");
  w_.require(n + 1, "diff target");
  auto it = diff_.find({s, t, n});
  if (it == diff_.end())
    it = diff_.emplace(HomKey{s, t, n}, Matrix(f_, dim(s, t, n + 1), dim(s, t, n))).first;
  return it->second;
}

void DGCategoryTab::set_identity(std::size_t x, Vec coords) {
  if (coords.size() != dim(x, x, 0)) throw StructuralError("identity coordinate length mismatch");
  identity_[x] = std::move(coords);
}

Morphism DGCategoryTab::identity(std::size_t x) const {
  auto it = identity_.find(x);
  if (it == identity_.end())
    throw StructuralError("no identity set for object '" + object_label(x) + "'");
  return Morphism{x, x, 0, it->second};
}

void DGCategoryTab::set_composition_entry(std::size_t s, std::size_t m, std::size_t t, int p,
                                          int q, std::size_t i, std::size_t j,
                                          std::optional<Vec> value) {
  w_.require(p, "composition left degree");
  w_.require(q, "composition right degree");
  w_.require(p + q, "composition result degree");
  auto& table = comp_[{s, m, t, p, q}];
  if (table.empty())
    table.assign(dim(m, t, p), std::vector<std::optional<Vec>>(dim(s, m, q)));
  if (i >= table.size() || j >= table[i].size())
    throw StructuralError("composition entry index out of range");
  if (value && value->size() != dim(s, t, p + q))
    throw StructuralError("composition entry has wrong target dimension");
  table[i][j] = std::move(value);
}

const std::optional<Vec>& DGCategoryTab::comp_entry(std::size_t s, std::size_t m, std::size_t t,
                                                    int p, int q, std::size_t i,
                                                    std::size_t j) const {
  auto it = comp_.find({s, m, t, p, q});
  if (it == comp_.end()) return kUnset;
  if (i >= it->second.size() || j >= it->second[i].size()) return kUnset;
  return it->second[i][j];
}

bool DGCategoryTab::composition_available(std::size_t s, std::size_t m, std::size_t t, int p,
                                          int q, std::size_t i, std::size_t j) const {
  return comp_entry(s, m, t, p, q, i, j).has_value();
}

Morphism DGCategoryTab::zero_morphism(std::size_t s, std::size_t t, int n) const {
  return Morphism{s, t, n, vec_zero(f_, dim(s, t, n))};
}

Morphism DGCategoryTab::basis_morphism(std::size_t s, std::size_t t, int n, std::size_t i) const {
  Morphism m = zero_morphism(s, t, n);
  if (i >= m.coords.size()) throw StructuralError("basis index out of range");
  m.coords[i] = Scalar::one(f_);
  return m;
}

void DGCategoryTab::check_morphism(const Morphism& m, const std::string& what) const {
  object_label(m.src);
  object_label(m.tgt);
  w_.require(m.degree, what);
  if (m.coords.size() != dim(m.src, m.tgt, m.degree))
    throw StructuralError(what + ": coordinate length mismatch in Hom(" + objects_[m.src] + "," +
                          objects_[m.tgt] + ") degree " + std::to_string(m.degree));
}

Morphism DGCategoryTab::compose(const Morphism& f, const Morphism& g) const {
  check_morphism(f, "compose (left)");
  check_morphism(g, "compose (right)");
  if (f.src != g.tgt)
    throw StructuralError("compose: middle objects differ ('" + objects_[f.src] + "' vs '" +
                          objects_[g.tgt] + "')");
  w_.require(f.degree + g.degree, "compose result");
  Morphism out = zero_morphism(g.src, f.tgt, f.degree + g.degree);
  for (std::size_t i = 0; i < f.coords.size(); ++i) {
    if (f.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.coords.size(); ++j) {
      if (g.coords[j].is_zero()) continue;
      const auto& e = comp_entry(g.src, g.tgt, f.tgt, f.degree, g.degree, i, j);
      if (!e)
        throw CapError("composition entry unavailable (truncated tabulation): " +
                       hom_labels(g.tgt, f.tgt, f.degree)[i] + " . " +
                       hom_labels(g.src, g.tgt, g.degree)[j]);
      const Scalar c = f.coords[i] * g.coords[j];
      for (std::size_t k = 0; k < out.coords.size(); ++k) out.coords[k] += c * (*e)[k];
    }
  }
  return out;
}

Morphism DGCategoryTab::differential(const Morphism& f) const {
  check_morphism(f, "differential");
  return Morphism{f.src, f.tgt, f.degree + 1,
                  diff_matrix(f.src, f.tgt, f.degree).apply(f.coords)};
}

Matrix DGCategoryTab::left_compose_matrix(const Morphism& f, std::size_t s, int q) const {
  check_morphism(f, "left_compose_matrix");
  Matrix out(f_, dim(s, f.tgt, f.degree + q), dim(s, f.src, q));
  for (std::size_t j = 0; j < out.cols(); ++j) {
    Morphism v = compose(f, basis_morphism(s, f.src, q, j));
    for (std::size_t i = 0; i < out.rows(); ++i) out.at(i, j) = v.coords[i];
  }
  return out;
}

Matrix DGCategoryTab::right_compose_matrix(const Morphism& g, std::size_t t, int p) const {
  check_morphism(g, "right_compose_matrix");
  Matrix out(f_, dim(g.src, t, p + g.degree), dim(g.tgt, t, p));
  for (std::size_t j = 0; j < out.cols(); ++j) {
    Morphism v = compose(basis_morphism(g.tgt, t, p, j), g);
    for (std::size_t i = 0; i < out.rows(); ++i) out.at(i, j) = v.coords[i];
  }
  return out;
}

CochainComplex DGCategoryTab::hom_complex(std::size_t s, std::size_t t) const {
  GradedSpace g(f_, w_);
  for (int n = w_.lo; n <= w_.hi; ++n) g.set_basis(n, hom_labels(s, t, n));
  CochainComplex c(std::move(g));
  for (int n = w_.lo; n < w_.hi; ++n) c.set_diff(n, diff_matrix(s, t, n));
  return c;
}

bool DGCategoryTab::operator==(const DGCategoryTab& o) const {
  if (!(f_ == o.f_) || !(w_ == o.w_) || status_ != o.status_ || objects_ != o.objects_)
    return false;
  const std::size_t n = objects_.size();
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      for (int d = w_.lo; d <= w_.hi; ++d)
        if (hom_labels(s, t, d) != o.hom_labels(s, t, d)) return false;
      for (int d = w_.lo; d < w_.hi; ++d)
        if (!(diff_matrix(s, t, d) == o.diff_matrix(s, t, d))) return false;
    }
  if (identity_ != o.identity_) return false;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t t = 0; t < n; ++t)
        for (int p = w_.lo; p <= w_.hi; ++p)
          for (int q = std::max(w_.lo, w_.lo - p); q <= w_.hi; ++q) {
            if (!w_.contains(p + q)) continue;
            const std::size_t dp = dim(m, t, p), dq = dim(s, m, q);
            for (std::size_t i = 0; i < dp; ++i)
              for (std::size_t j = 0; j < dq; ++j) {
                const auto& x = comp_entry(s, m, t, p, q, i, j);
                const auto& y = o.comp_entry(s, m, t, p, q, i, j);
                if (x.has_value() != y.has_value()) return false;
                if (x && !vec_eq(*x, *y)) return false;
              }
          }
  return true;
}

std::vector<AxiomViolation> check_axioms(const DGCategoryTab& t) {
  std::vector<AxiomViolation> out;
  const Window w = t.window();
  const std::size_t nobj = t.num_objects();

  auto hom_name = [&](std::size_t s, std::size_t tt) {
    return "Hom(" + t.object_label(s) + "," + t.object_label(tt) + ")";
  };

  /* identities exist and are closed */
  for (std::size_t x = 0; x < nobj; ++x) {
    Morphism id;
    try {
      id = t.identity(x);
    } catch (const StructuralError&) {
      out.push_back({"identity-missing", t.object_label(x)});
      continue;
    }
    if (w.contains(1) && !morphism_is_zero(t.differential(id)))
      out.push_back({"identity-not-closed", t.object_label(x)});
  }

  /* d^2 = 0 */
  for (std::size_t s = 0; s < nobj; ++s)
    for (std::size_t tt = 0; tt < nobj; ++tt)
      for (int n = w.lo; n + 1 < w.hi; ++n)
        if (!(t.diff_matrix(s, tt, n + 1) * t.diff_matrix(s, tt, n)).is_zero())
          out.push_back({"d-squared", hom_name(s, tt) + " degrees " + std::to_string(n) + ".." +
                                          std::to_string(n + 2)});

  /* nonzero hom slots, for loop pruning */
  struct Slot {
    std::size_t s, t;
    int n;
    std::size_t d;
  };
  std::vector<Slot> slots;
  for (std::size_t s = 0; s < nobj; ++s)
    for (std::size_t tt = 0; tt < nobj; ++tt)
      for (int n = w.lo; n <= w.hi; ++n)
        if (std::size_t d = t.dim(s, tt, n); d > 0) slots.push_back({s, tt, n, d});

  /* unit laws on every basis element */
  for (const auto& sl : slots)
    for (std::size_t i = 0; i < sl.d; ++i) {
      Morphism f = t.basis_morphism(sl.s, sl.t, sl.n, i);
      const std::string& lf = t.hom_labels(sl.s, sl.t, sl.n)[i];
      try {
        if (!morphism_eq(t.compose(f, t.identity(sl.s)), f))
          out.push_back({"unit", hom_name(sl.s, sl.t) + ": " + lf + " . id"});
        if (!morphism_eq(t.compose(t.identity(sl.t), f), f))
          out.push_back({"unit", hom_name(sl.s, sl.t) + ": id . " + lf});
      } catch (const CapError&) {
      } catch (const StructuralError&) {
      }
    }

  /* Leibniz rule on composable basis pairs */
  for (const auto& a : slots)
    for (const auto& b : slots) {
      if (b.t != a.s) continue; // need g: s -> m then f: m -> t
      const int p = a.n, q = b.n;
      if (!w.contains(p + q) || p + q + 1 > w.hi || p + 1 > w.hi || q + 1 > w.hi) continue;
      for (std::size_t i = 0; i < a.d; ++i)
        for (std::size_t j = 0; j < b.d; ++j) {
          Morphism f = t.basis_morphism(a.s, a.t, p, i), g = t.basis_morphism(b.s, b.t, q, j);
          try {
            Morphism lhs = t.differential(t.compose(f, g));
            Morphism rhs = morphism_add(
                t.compose(t.differential(f), g),
                morphism_scale(Scalar::from_int(t.field(), p % 2 == 0 ? 1 : -1),
                               t.compose(f, t.differential(g))));
            if (!morphism_eq(lhs, rhs))
              out.push_back({"leibniz", hom_name(b.s, a.t) + ": d(" +
                                            t.hom_labels(a.s, a.t, p)[i] + " . " +
                                            t.hom_labels(b.s, b.t, q)[j] + ")"});
          } catch (const CapError&) {
          }
        }
    }

  /* associativity on composable basis triples */
  for (const auto& a : slots)
    for (const auto& b : slots) {
      if (b.t != a.s || !w.contains(a.n + b.n)) continue;
      for (const auto& c : slots) {
        if (c.t != b.s || !w.contains(b.n + c.n) || !w.contains(a.n + b.n + c.n)) continue;
        for (std::size_t i = 0; i < a.d; ++i) {
          Morphism f = t.basis_morphism(a.s, a.t, a.n, i);
          for (std::size_t j = 0; j < b.d; ++j) {
            Morphism g = t.basis_morphism(b.s, b.t, b.n, j);
            Morphism fg;
            try {
              fg = t.compose(f, g);
            } catch (const CapError&) {
              continue;
            }
            for (std::size_t k = 0; k < c.d; ++k) {
              Morphism h = t.basis_morphism(c.s, c.t, c.n, k);
              try {
                if (!morphism_eq(t.compose(fg, h), t.compose(f, t.compose(g, h))))
                  out.push_back({"assoc", "(" + t.hom_labels(a.s, a.t, a.n)[i] + " . " +
                                              t.hom_labels(b.s, b.t, b.n)[j] + ") . " +
                                              t.hom_labels(c.s, c.t, c.n)[k] + " from " +
                                              t.object_label(c.s)});
              } catch (const CapError&) {
              }
            }
          }
        }
      }
    }

  return out;
}

DGCategoryTab full_subcategory(const DGCategoryTab& t, const std::vector<std::size_t>& objs) {
  DGCategoryTab out(t.field(), t.window());
  out.set_status(t.status());
  out.set_sup_bound(t.sup_bound());
  std::map<std::size_t, std::size_t> to_new;
  for (std::size_t x : objs) {
    if (to_new.count(x)) throw StructuralError("full_subcategory: repeated object");
    to_new[x] = out.add_object(t.object_label(x));
  }
  for (auto [xo, xn] : to_new)
    for (auto [yo, yn] : to_new)
      for (int n = t.window().lo; n <= t.window().hi; ++n) {
        if (t.dim(xo, yo, n) == 0) continue;
        out.set_hom_basis(xn, yn, n, t.hom_labels(xo, yo, n));
      }
  for (auto [xo, xn] : to_new)
    for (auto [yo, yn] : to_new)
      for (int n = t.window().lo; n < t.window().hi; ++n)
        if (t.dim(xo, yo, n) || t.dim(xo, yo, n + 1))
          out.set_diff(xn, yn, n, t.diff_matrix(xo, yo, n));
  for (auto [xo, xn] : to_new) out.set_identity(xn, t.identity(xo).coords);
  for (auto [so, sn] : to_new)
    for (auto [mo, mn] : to_new)
      for (auto [to_, tn] : to_new)
        for (int p = t.window().lo; p <= t.window().hi; ++p)
          for (int q = t.window().lo; q <= t.window().hi; ++q) {
            if (!t.window().contains(p + q)) continue;
            const std::size_t dp = t.dim(mo, to_, p), dq = t.dim(so, mo, q);
            for (std::size_t i = 0; i < dp; ++i)
              for (std::size_t j = 0; j < dq; ++j)
                out.set_composition_entry(
                    sn, mn, tn, p, q, i, j,
                    t.composition_available(so, mo, to_, p, q, i, j)
                        ? std::optional<Vec>(
                              t.compose(t.basis_morphism(mo, to_, p, i),
                                        t.basis_morphism(so, mo, q, j))
                                  .coords)
                        : std::nullopt);
          }
  /* carry over registered candidates living inside the subcategory */
  for (const Morphism& m : t.registered_equivs()) {
    auto si = to_new.find(m.src), ti = to_new.find(m.tgt);
    if (si != to_new.end() && ti != to_new.end())
      out.register_equiv(Morphism{si->second, ti->second, m.degree, m.coords});
  }
  return out;
}

DGCategoryTab window_restrict(const DGCategoryTab& t, Window w) {
  if (w.lo < t.window().lo || w.hi > t.window().hi)
    throw StructuralError("window_restrict: new window must sit inside the old one");
  DGCategoryTab out(t.field(), w);
  out.set_status(t.status());
  out.set_sup_bound(t.sup_bound());
  for (std::size_t x = 0; x < t.num_objects(); ++x) out.add_object(t.object_label(x));
  for (std::size_t s = 0; s < t.num_objects(); ++s)
    for (std::size_t u = 0; u < t.num_objects(); ++u)
      for (int n = w.lo; n <= w.hi; ++n)
        if (t.dim(s, u, n)) out.set_hom_basis(s, u, n, t.hom_labels(s, u, n));
  for (std::size_t s = 0; s < t.num_objects(); ++s)
    for (std::size_t u = 0; u < t.num_objects(); ++u)
      for (int n = w.lo; n < w.hi; ++n)
        if (t.dim(s, u, n) || t.dim(s, u, n + 1)) out.set_diff(s, u, n, t.diff_matrix(s, u, n));
  for (std::size_t x = 0; x < t.num_objects(); ++x) out.set_identity(x, t.identity(x).coords);
  for (std::size_t s = 0; s < t.num_objects(); ++s)
    for (std::size_t m = 0; m < t.num_objects(); ++m)
      for (std::size_t u = 0; u < t.num_objects(); ++u)
        for (int p = w.lo; p <= w.hi; ++p)
          for (int q = w.lo; q <= w.hi; ++q) {
            if (!w.contains(p + q)) continue;
            const std::size_t dp = t.dim(m, u, p), dq = t.dim(s, m, q);
            for (std::size_t i = 0; i < dp; ++i)
              for (std::size_t j = 0; j < dq; ++j)
                out.set_composition_entry(
                    s, m, u, p, q, i, j,
                    t.composition_available(s, m, u, p, q, i, j)
                        ? std::optional<Vec>(t.compose(t.basis_morphism(m, u, p, i),
                                                       t.basis_morphism(s, m, q, j))
                                                 .coords)
                        : std::nullopt);
          }
  for (const Morphism& m : t.registered_equivs())
    if (w.contains(m.degree)) out.register_equiv(m);
  return out;
}

DGCategoryTab disjoint_union(const DGCategoryTab& a, const DGCategoryTab& b) {
  if (!(a.field() == b.field())) throw StructuralError("disjoint_union: field mismatch");
  if (!(a.window() == b.window())) throw StructuralError("disjoint_union: window mismatch");
  DGCategoryTab out(a.field(), a.window());
  out.set_status(a.status() == Tabulation::Complete && b.status() == Tabulation::Complete
                     ? Tabulation::Complete
                     : Tabulation::Truncated);
  out.set_sup_bound(std::max(a.sup_bound(), b.sup_bound()));

  auto copy_in = [&](const DGCategoryTab& src, std::size_t base) {
    for (std::size_t s = 0; s < src.num_objects(); ++s)
      for (std::size_t t = 0; t < src.num_objects(); ++t)
        for (int n = src.window().lo; n <= src.window().hi; ++n)
          if (src.dim(s, t, n)) out.set_hom_basis(base + s, base + t, n, src.hom_labels(s, t, n));
    for (std::size_t s = 0; s < src.num_objects(); ++s)
      for (std::size_t t = 0; t < src.num_objects(); ++t)
        for (int n = src.window().lo; n < src.window().hi; ++n)
          if (src.dim(s, t, n) || src.dim(s, t, n + 1))
            out.set_diff(base + s, base + t, n, src.diff_matrix(s, t, n));
    for (std::size_t x = 0; x < src.num_objects(); ++x)
      out.set_identity(base + x, src.identity(x).coords);
    for (std::size_t s = 0; s < src.num_objects(); ++s)
      for (std::size_t m = 0; m < src.num_objects(); ++m)
        for (std::size_t t = 0; t < src.num_objects(); ++t)
          for (int p = src.window().lo; p <= src.window().hi; ++p)
            for (int q = src.window().lo; q <= src.window().hi; ++q) {
              if (!src.window().contains(p + q)) continue;
              const std::size_t dp = src.dim(m, t, p), dq = src.dim(s, m, q);
              for (std::size_t i = 0; i < dp; ++i)
                for (std::size_t j = 0; j < dq; ++j)
                  out.set_composition_entry(
                      base + s, base + m, base + t, p, q, i, j,
                      src.composition_available(s, m, t, p, q, i, j)
                          ? std::optional<Vec>(src.compose(src.basis_morphism(m, t, p, i),
                                                           src.basis_morphism(s, m, q, j))
                                                   .coords)
                          : std::nullopt);
            }
    for (const Morphism& m : src.registered_equivs())
      out.register_equiv(Morphism{base + m.src, base + m.tgt, m.degree, m.coords});
  };

  for (std::size_t x = 0; x < a.num_objects(); ++x) out.add_object(a.object_label(x));
  for (std::size_t x = 0; x < b.num_objects(); ++x) {
    std::string l = b.object_label(x);
    if (out.find_object(l)) l += "#2";
    out.add_object(l);
  }
  copy_in(a, 0);
  copy_in(b, a.num_objects());
  return out;
}

} // namespace dgcalc
