#include "dgcalc/fiber.hpp"

#include <string>

#include "dgcalc/errors.hpp"

namespace dgcalc {
namespace {

using Key = std::tuple<std::size_t, std::size_t, int>;

Vec slot_coords(const FiberCat& fc, std::size_t s, std::size_t t, int n, const Vec& longv) {
  const auto it = fc.basis.find(Key{s, t, n});
  const std::vector<Vec> empty;
  const std::vector<Vec>& gens = it == fc.basis.end() ? empty : it->second;
  return SubquotientBasis(fc.cat.field(), longv.size(), {}, gens).coords(longv);
}

Vec long_vec(const FiberCat& fc, const Morphism& m) {
  const auto it = fc.basis.find(Key{m.src, m.tgt, m.degree});
  const auto& pr_s = fc.objs[m.src];
  const auto& pr_t = fc.objs[m.tgt];
  Vec v = vec_zero(fc.cat.field(), fc.a.dim(pr_s.first, pr_t.first, m.degree) +
                                       fc.b.dim(pr_s.second, pr_t.second, m.degree));
  if (it != fc.basis.end())
    for (std::size_t i = 0; i < m.coords.size(); ++i)
      v = vec_add(v, vec_scale(m.coords[i], it->second[i]));
  return v;
}

}  // namespace

std::optional<std::size_t> FiberCat::obj_index(std::size_t x, std::size_t y) const {
  for (std::size_t i = 0; i < objs.size(); ++i)
    if (objs[i].first == x && objs[i].second == y) return i;
  return std::nullopt;
}

FiberCat fiber_product(const DGFunctor& F, const DGFunctor& G) {
  const DGCategoryTab &A = F.source(), &B = G.source(), &C = F.target();
  if (!(C == G.target()))
    throw StructuralError("fiber_product: the two functors must share their target");
  if (!(A.window() == B.window()) || !(A.window() == C.window()))
    throw StructuralError("fiber_product: all three categories must share one window");
  for (const DGFunctor* fn : {&F, &G}) {
    const auto bad = fn->check();
    if (!bad.empty())
      throw StructuralError("fiber_product: functor fails the functor laws: " + bad.front());
  }
  const Field k = A.field();
  const Window w = A.window();

  FiberCat fc{DGCategoryTab(k, w), A, B, {}, {}};
  DGCategoryTab& P = fc.cat;
  for (std::size_t x = 0; x < A.num_objects(); ++x)
    for (std::size_t y = 0; y < B.num_objects(); ++y)
      if (F.object_image(x) == G.object_image(y)) {
        fc.objs.emplace_back(x, y);
        P.add_object("(" + A.object_label(x) + "," + B.object_label(y) + ")");
      }

  /* hom slots: kernel of [F | -G] */
  for (std::size_t s = 0; s < fc.objs.size(); ++s)
    for (std::size_t t = 0; t < fc.objs.size(); ++t)
      for (int n = w.lo; n <= w.hi; ++n) {
        const auto [sx, sy] = fc.objs[s];
        const auto [tx, ty] = fc.objs[t];
        const std::size_t da = A.dim(sx, tx, n), db = B.dim(sy, ty, n);
        if (da + db == 0) continue;
        const std::size_t dc = C.dim(F.object_image(sx), F.object_image(tx), n);
        Matrix cons(k, dc, da + db);
        if (da) {
          const Matrix& mf = F.hom_matrix(sx, tx, n);
          for (std::size_t i = 0; i < dc; ++i)
            for (std::size_t j = 0; j < da; ++j) cons.at(i, j) = mf.at(i, j);
        }
        if (db) {
          const Matrix& mg = G.hom_matrix(sy, ty, n);
          for (std::size_t i = 0; i < dc; ++i)
            for (std::size_t j = 0; j < db; ++j) cons.at(i, da + j) = -mg.at(i, j);
        }
        const std::vector<Vec> ker = nullspace(cons);
        if (ker.empty()) continue;
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < ker.size(); ++i) labels.push_back("k" + std::to_string(i));
        P.set_hom_basis(s, t, n, labels);
        fc.basis.emplace(Key{s, t, n}, ker);
      }

  for (std::size_t i = 0; i < fc.objs.size(); ++i) {
    const auto [x, y] = fc.objs[i];
    Vec v = A.identity(x).coords;
    const Vec& ib = B.identity(y).coords;
    v.insert(v.end(), ib.begin(), ib.end());
    P.set_identity(i, slot_coords(fc, i, i, 0, v));
  }

  for (std::size_t s = 0; s < fc.objs.size(); ++s)
    for (std::size_t t = 0; t < fc.objs.size(); ++t)
      for (int n = w.lo; n < w.hi; ++n) {
        const std::size_t dn = P.dim(s, t, n), dn1 = P.dim(s, t, n + 1);
        if (!dn && !dn1) continue;
        const auto [sx, sy] = fc.objs[s];
        const auto [tx, ty] = fc.objs[t];
        const std::size_t da = A.dim(sx, tx, n);
        std::vector<Vec> cols;
        for (std::size_t j = 0; j < dn; ++j) {
          const Vec& v = fc.basis.at(Key{s, t, n})[j];
          const Vec va(v.begin(), v.begin() + da), vb(v.begin() + da, v.end());
          Vec dv = A.diff_matrix(sx, tx, n).apply(va);
          const Vec dvb = B.diff_matrix(sy, ty, n).apply(vb);
          dv.insert(dv.end(), dvb.begin(), dvb.end());
          cols.push_back(slot_coords(fc, s, t, n + 1, dv));
        }
        P.set_diff(s, t, n, Matrix::from_columns(k, dn1, cols));
      }

  bool lossy = false;
  for (std::size_t s = 0; s < fc.objs.size(); ++s)
    for (std::size_t m = 0; m < fc.objs.size(); ++m)
      for (std::size_t t = 0; t < fc.objs.size(); ++t)
        for (int p = w.lo; p <= w.hi; ++p)
          for (int q = w.lo; q <= w.hi; ++q) {
            if (!w.contains(p + q)) continue;
            const std::size_t dp = P.dim(m, t, p), dq = P.dim(s, m, q);
            if (!dp || !dq) continue;
            const auto [sx, sy] = fc.objs[s];
            const auto [mx, my] = fc.objs[m];
            const auto [tx, ty] = fc.objs[t];
            const std::size_t dfa = A.dim(mx, tx, p), dga = A.dim(sx, mx, q);
            for (std::size_t i = 0; i < dp; ++i)
              for (std::size_t j = 0; j < dq; ++j) {
                const Vec& u = fc.basis.at(Key{m, t, p})[i];
                const Vec& v = fc.basis.at(Key{s, m, q})[j];
                std::optional<Vec> val;
                try {
                  const Morphism ca =
                      A.compose(Morphism{mx, tx, p, Vec(u.begin(), u.begin() + dfa)},
                                Morphism{sx, mx, q, Vec(v.begin(), v.begin() + dga)});
                  const Morphism cb =
                      B.compose(Morphism{my, ty, p, Vec(u.begin() + dfa, u.end())},
                                Morphism{sy, my, q, Vec(v.begin() + dga, v.end())});
                  Vec cc = ca.coords;
                  cc.insert(cc.end(), cb.coords.begin(), cb.coords.end());
                  val = slot_coords(fc, s, t, p + q, cc);
                } catch (const CapError&) {
                  val = std::nullopt;
                  lossy = true;
                }
                P.set_composition_entry(s, m, t, p, q, i, j, val);
              }
          }

  P.set_sup_bound(std::max(A.sup_bound(), B.sup_bound()));
  P.set_status(!lossy && A.status() == Tabulation::Complete &&
                       B.status() == Tabulation::Complete && C.status() == Tabulation::Complete
                   ? Tabulation::Complete
                   : Tabulation::Truncated);
  return fc;
}

Morphism fiber_morphism(const FiberCat& fc, const Morphism& f, const Morphism& g) {
  fc.a.check_morphism(f, "fiber component");
  fc.b.check_morphism(g, "fiber component");
  if (f.degree != g.degree)
    throw StructuralError("fiber morphism components must share one degree");
  const auto s = fc.obj_index(f.src, g.src), t = fc.obj_index(f.tgt, g.tgt);
  if (!s || !t)
    throw StructuralError("fiber morphism endpoints are not objects of the fiber product");
  Vec v = f.coords;
  v.insert(v.end(), g.coords.begin(), g.coords.end());
  try {
    return Morphism{*s, *t, f.degree, slot_coords(fc, *s, *t, f.degree, v)};
  } catch (const PreconditionError&) {
    throw PreconditionError(
        "fiber morphism components do not map to the same target morphism");
  }
}

Morphism fiber_component_a(const FiberCat& fc, const Morphism& m) {
  fc.cat.check_morphism(m, "fiber component");
  const auto [sx, sy] = fc.objs[m.src];
  const auto [tx, ty] = fc.objs[m.tgt];
  const Vec v = long_vec(fc, m);
  const std::size_t da = fc.a.dim(sx, tx, m.degree);
  (void)sy;
  (void)ty;
  return Morphism{sx, tx, m.degree, Vec(v.begin(), v.begin() + da)};
}

Morphism fiber_component_b(const FiberCat& fc, const Morphism& m) {
  fc.cat.check_morphism(m, "fiber component");
  const auto [sx, sy] = fc.objs[m.src];
  const auto [tx, ty] = fc.objs[m.tgt];
  const Vec v = long_vec(fc, m);
  const std::size_t da = fc.a.dim(sx, tx, m.degree);
  return Morphism{sy, ty, m.degree, Vec(v.begin() + da, v.end())};
}

namespace {

DGFunctor fiber_projection(const FiberCat& fc, bool first) {
  DGFunctor F(fc.cat, first ? fc.a : fc.b);
  for (std::size_t i = 0; i < fc.objs.size(); ++i)
    F.set_object_image(i, first ? fc.objs[i].first : fc.objs[i].second);
  const Window w = fc.cat.window();
  for (std::size_t s = 0; s < fc.objs.size(); ++s)
    for (std::size_t t = 0; t < fc.objs.size(); ++t)
      for (int n = w.lo; n <= w.hi; ++n) {
        const std::size_t dn = fc.cat.dim(s, t, n);
        if (!dn) continue;
        const auto [sx, sy] = fc.objs[s];
        const auto [tx, ty] = fc.objs[t];
        const std::size_t da = fc.a.dim(sx, tx, n);
        const std::size_t rows = first ? da : fc.b.dim(sy, ty, n);
        std::vector<Vec> cols;
        for (std::size_t j = 0; j < dn; ++j) {
          const Vec& v = fc.basis.at(Key{s, t, n})[j];
          cols.push_back(first ? Vec(v.begin(), v.begin() + da)
                               : Vec(v.begin() + da, v.end()));
        }
        F.set_hom_matrix(s, t, n, Matrix::from_columns(fc.cat.field(), rows, cols));
      }
  return F;
}

}  // namespace

DGFunctor fiber_pa(const FiberCat& fc) { return fiber_projection(fc, true); }
DGFunctor fiber_pb(const FiberCat& fc) { return fiber_projection(fc, false); }

DGFunctor fiber_pair_functor(const FiberCat& fc, const DGFunctor& H1, const DGFunctor& H2) {
  if (!(H1.source() == H2.source()))
    throw StructuralError("fiber_pair_functor: the two functors must share their source");
  if (!(H1.target() == fc.a) || !(H2.target() == fc.b))
    throw StructuralError(
        "fiber_pair_functor: targets must be the two legs of the fiber product");
  const DGCategoryTab& D = H1.source();
  DGFunctor F(D, fc.cat);
  for (std::size_t x = 0; x < D.num_objects(); ++x) {
    const auto i = fc.obj_index(H1.object_image(x), H2.object_image(x));
    if (!i)
      throw StructuralError("fiber_pair_functor: image pair is not a fiber object");
    F.set_object_image(x, *i);
  }
  const Window w = fc.cat.window();
  for (std::size_t s = 0; s < D.num_objects(); ++s)
    for (std::size_t t = 0; t < D.num_objects(); ++t)
      for (int n = w.lo; n <= w.hi; ++n) {
        const std::size_t dn = D.dim(s, t, n);
        if (!dn) continue;
        const std::size_t fs = F.object_image(s), ft = F.object_image(t);
        std::vector<Vec> cols;
        for (std::size_t j = 0; j < dn; ++j) {
          Vec v = H1.hom_matrix(s, t, n).column(j);
          const Vec v2 = H2.hom_matrix(s, t, n).column(j);
          v.insert(v.end(), v2.begin(), v2.end());
          try {
            cols.push_back(slot_coords(fc, fs, ft, n, v));
          } catch (const PreconditionError&) {
            throw StructuralError(
                "fiber_pair_functor: image morphisms do not agree in the shared target");
          }
        }
        F.set_hom_matrix(s, t, n, Matrix::from_columns(fc.cat.field(), fc.cat.dim(fs, ft, n),
                                                       cols));
      }
  return F;
}

}  // namespace dgcalc
