#include "dgcalc/fun_cat.hpp"

#include <string>

#include "dgcalc/errors.hpp"

namespace dgcalc {
namespace {

using Key = std::tuple<std::size_t, std::size_t, int>;

Scalar pm_one(Field f, long e) {
  return e % 2 != 0 ? -Scalar::one(f) : Scalar::one(f);
}

Vec slot_coords(const FunCat& fn, std::size_t s, std::size_t t, int n, const Vec& longv) {
  const auto it = fn.basis.find(Key{s, t, n});
  const std::vector<Vec> empty;
  const std::vector<Vec>& gens = it == fn.basis.end() ? empty : it->second;
  return SubquotientBasis(fn.cat.field(), longv.size(), {}, gens).coords(longv);
}

Vec long_vec(const FunCat& fn, const Morphism& m) {
  const auto it = fn.basis.find(Key{m.src, m.tgt, m.degree});
  Vec v = vec_zero(fn.cat.field(), fn.offsets(m.src, m.tgt, m.degree).back());
  if (it != fn.basis.end())
    for (std::size_t i = 0; i < m.coords.size(); ++i)
      v = vec_add(v, vec_scale(m.coords[i], it->second[i]));
  return v;
}

}  // namespace

std::optional<std::size_t> FunCat::find_functor(const DGFunctor& f) const {
  for (std::size_t i = 0; i < roster.size(); ++i)
    if (roster[i] == f) return i;
  return std::nullopt;
}

std::vector<std::size_t> FunCat::offsets(std::size_t s, std::size_t t, int n) const {
  std::vector<std::size_t> off;
  std::size_t acc = 0;
  for (std::size_t x = 0; x < a.num_objects(); ++x) {
    off.push_back(acc);
    acc += b.dim(roster[s].object_image(x), roster[t].object_image(x), n);
  }
  off.push_back(acc);
  return off;
}

FunCat fun_dg(const DGCategoryTab& a, const DGCategoryTab& b,
              const std::vector<DGFunctor>& roster) {
  if (!(a.field() == b.field()))
    throw StructuralError("functor category needs one field on both sides");
  if (!(a.window() == b.window()))
    throw StructuralError("functor category needs one window on both sides");
  for (const auto& f : roster) {
    if (!(f.source() == a) || !(f.target() == b))
      throw StructuralError("roster functor does not run between the given categories");
    const auto bad = f.check();
    if (!bad.empty())
      throw StructuralError("roster functor fails the functor laws: " + bad.front());
  }
  const Field k = a.field();
  const Window w = a.window();

  FunCat fn{DGCategoryTab(k, w), a, b, roster, {}};
  DGCategoryTab& P = fn.cat;
  for (std::size_t i = 0; i < roster.size(); ++i) P.add_object("F" + std::to_string(i));

  bool lossy = false;

  /* visible naturality kernels per slot */
  std::map<Key, std::vector<Vec>> kernels;
  for (std::size_t s = 0; s < roster.size(); ++s)
    for (std::size_t t = 0; t < roster.size(); ++t)
      for (int n = w.lo; n <= w.hi; ++n) {
        const auto off = fn.offsets(s, t, n);
        const std::size_t ambient = off.back();
        if (!ambient) continue;
        std::vector<Vec> rows;
        for (std::size_t x = 0; x < a.num_objects(); ++x)
          for (std::size_t y = 0; y < a.num_objects(); ++y)
            for (int m = w.lo; m <= w.hi; ++m)
              for (std::size_t fi = 0; fi < a.dim(x, y, m); ++fi) {
                const Morphism f = a.basis_morphism(x, y, m, fi);
                const Morphism ff = roster[s].apply(f), gf = roster[t].apply(f);
                const std::size_t fsx = roster[s].object_image(x),
                                  fsy = roster[s].object_image(y),
                                  ftx = roster[t].object_image(x),
                                  fty = roster[t].object_image(y);
                const std::size_t dy = b.dim(fsy, fty, n), dx = b.dim(fsx, ftx, n);
                const bool touches = (dy && !morphism_is_zero(ff)) ||
                                     (dx && !morphism_is_zero(gf));
                if (!touches) continue;
                if (!w.contains(n + m)) {
                  if (n + m < w.lo || n + m <= b.sup_bound()) lossy = true;
                  continue;
                }
                try {
                  const Matrix rc = b.right_compose_matrix(ff, fty, n);
                  const Matrix lc = b.left_compose_matrix(gf, fsx, n);
                  const Scalar sg = -pm_one(k, static_cast<long>(n) * m);
                  for (std::size_t r = 0; r < rc.rows(); ++r) {
                    Vec row = vec_zero(k, ambient);
                    for (std::size_t j = 0; j < dy; ++j) row[off[y] + j] = rc.at(r, j);
                    for (std::size_t j = 0; j < dx; ++j)
                      row[off[x] + j] = row[off[x] + j] + sg * lc.at(r, j);
                    rows.push_back(row);
                  }
                } catch (const CapError&) {
                  lossy = true;
                }
              }
        Matrix cons(k, rows.size(), ambient);
        for (std::size_t r = 0; r < rows.size(); ++r)
          for (std::size_t c = 0; c < ambient; ++c) cons.at(r, c) = rows[r][c];
        auto ker = nullspace(cons);
        if (!ker.empty()) kernels.emplace(Key{s, t, n}, std::move(ker));
      }

  /* refine downwards so the differential closes over the chosen bases */
  for (std::size_t s = 0; s < roster.size(); ++s)
    for (std::size_t t = 0; t < roster.size(); ++t)
      for (int n = w.hi - 1; n >= w.lo; --n) {
        const auto it = kernels.find(Key{s, t, n});
        if (it == kernels.end()) continue;
        const auto itn = kernels.find(Key{s, t, n + 1});
        const std::vector<Vec> empty;
        const std::vector<Vec>& up = itn == kernels.end() ? empty : itn->second;
        const auto off = fn.offsets(s, t, n);
        const auto off1 = fn.offsets(s, t, n + 1);
        const std::size_t amb1 = off1.back();
        auto apply_d = [&](const Vec& v) {
          Vec dv = vec_zero(k, amb1);
          for (std::size_t x = 0; x < a.num_objects(); ++x) {
            const std::size_t fx = roster[s].object_image(x),
                              gx = roster[t].object_image(x);
            const std::size_t dimx = b.dim(fx, gx, n);
            if (!dimx) continue;
            const Vec block(v.begin() + off[x], v.begin() + off[x] + dimx);
            const Vec db = b.diff_matrix(fx, gx, n).apply(block);
            for (std::size_t j = 0; j < db.size(); ++j) dv[off1[x] + j] = db[j];
          }
          return dv;
        };
        /* solve D K c = U y: nullspace of [D K | -U], keep independent c parts */
        const std::size_t nk = it->second.size(), nu = up.size();
        Matrix sys(k, amb1, nk + nu);
        for (std::size_t j = 0; j < nk; ++j) {
          const Vec dv = apply_d(it->second[j]);
          for (std::size_t r = 0; r < amb1; ++r) sys.at(r, j) = dv[r];
        }
        for (std::size_t j = 0; j < nu; ++j)
          for (std::size_t r = 0; r < amb1; ++r) sys.at(r, nk + j) = -up[j][r];
        const auto sols = nullspace(sys);
        std::vector<Vec> cparts;
        for (const Vec& sv : sols) cparts.push_back(Vec(sv.begin(), sv.begin() + nk));
        SubquotientBasis keep(k, nk, {}, cparts);
        std::vector<Vec> refined;
        for (std::size_t ci : keep.chosen()) {
          Vec v = vec_zero(k, off.back());
          for (std::size_t j = 0; j < nk; ++j)
            v = vec_add(v, vec_scale(cparts[ci][j], it->second[j]));
          refined.push_back(v);
        }
        if (refined.size() < nk) lossy = true;
        if (refined.empty())
          kernels.erase(it);
        else
          it->second = std::move(refined);
      }

  fn.basis = kernels;
  for (const auto& [key, vecs] : fn.basis) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < vecs.size(); ++i) labels.push_back("n" + std::to_string(i));
    P.set_hom_basis(std::get<0>(key), std::get<1>(key), std::get<2>(key), labels);
  }

  for (std::size_t i = 0; i < roster.size(); ++i) {
    const auto off = fn.offsets(i, i, 0);
    Vec v = vec_zero(k, off.back());
    for (std::size_t x = 0; x < a.num_objects(); ++x) {
      const Vec& id = b.identity(roster[i].object_image(x)).coords;
      for (std::size_t j = 0; j < id.size(); ++j) v[off[x] + j] = id[j];
    }
    P.set_identity(i, slot_coords(fn, i, i, 0, v));
  }

  for (std::size_t s = 0; s < roster.size(); ++s)
    for (std::size_t t = 0; t < roster.size(); ++t)
      for (int n = w.lo; n < w.hi; ++n) {
        const std::size_t dn = P.dim(s, t, n), dn1 = P.dim(s, t, n + 1);
        if (!dn && !dn1) continue;
        const auto off = fn.offsets(s, t, n);
        const auto off1 = fn.offsets(s, t, n + 1);
        std::vector<Vec> cols;
        for (std::size_t j = 0; j < dn; ++j) {
          const Vec& v = fn.basis.at(Key{s, t, n})[j];
          Vec dv = vec_zero(k, off1.back());
          for (std::size_t x = 0; x < fn.a.num_objects(); ++x) {
            const std::size_t fx = roster[s].object_image(x),
                              gx = roster[t].object_image(x);
            const std::size_t dimx = b.dim(fx, gx, n);
            if (!dimx) continue;
            const Vec block(v.begin() + off[x], v.begin() + off[x] + dimx);
            const Vec db = b.diff_matrix(fx, gx, n).apply(block);
            for (std::size_t r = 0; r < db.size(); ++r) dv[off1[x] + r] = db[r];
          }
          cols.push_back(slot_coords(fn, s, t, n + 1, dv));
        }
        P.set_diff(s, t, n, Matrix::from_columns(k, dn1, cols));
      }

  for (std::size_t s = 0; s < roster.size(); ++s)
    for (std::size_t m = 0; m < roster.size(); ++m)
      for (std::size_t t = 0; t < roster.size(); ++t)
        for (int p = w.lo; p <= w.hi; ++p)
          for (int q = w.lo; q <= w.hi; ++q) {
            if (!w.contains(p + q)) continue;
            const std::size_t dp = P.dim(m, t, p), dq = P.dim(s, m, q);
            if (!dp || !dq) continue;
            const auto offf = fn.offsets(m, t, p);
            const auto offg = fn.offsets(s, m, q);
            const auto offr = fn.offsets(s, t, p + q);
            for (std::size_t i = 0; i < dp; ++i)
              for (std::size_t j = 0; j < dq; ++j) {
                const Vec& u = fn.basis.at(Key{m, t, p})[i];
                const Vec& v = fn.basis.at(Key{s, m, q})[j];
                std::optional<Vec> val;
                try {
                  Vec cc = vec_zero(k, offr.back());
                  for (std::size_t x = 0; x < fn.a.num_objects(); ++x) {
                    const std::size_t sx = roster[s].object_image(x),
                                      mx = roster[m].object_image(x),
                                      tx = roster[t].object_image(x);
                    const std::size_t du = b.dim(mx, tx, p), dv = b.dim(sx, mx, q);
                    if (!du || !dv) continue;
                    const Morphism c = b.compose(
                        Morphism{mx, tx, p,
                                 Vec(u.begin() + offf[x], u.begin() + offf[x] + du)},
                        Morphism{sx, mx, q,
                                 Vec(v.begin() + offg[x], v.begin() + offg[x] + dv)});
                    for (std::size_t r = 0; r < c.coords.size(); ++r)
                      cc[offr[x] + r] = c.coords[r];
                  }
                  val = slot_coords(fn, s, t, p + q, cc);
                } catch (const CapError&) {
                  val = std::nullopt;
                  lossy = true;
                } catch (const PreconditionError&) {
                  val = std::nullopt;
                  lossy = true;
                }
                P.set_composition_entry(s, m, t, p, q, i, j, val);
              }
          }

  P.set_sup_bound(b.sup_bound());
  P.set_status(!lossy && a.status() == Tabulation::Complete &&
                       b.status() == Tabulation::Complete
                   ? Tabulation::Complete
                   : Tabulation::Truncated);
  return fn;
}

Morphism nat_component(const FunCat& fn, const Morphism& m, std::size_t x) {
  fn.cat.check_morphism(m, "functor-category component");
  fn.a.object_label(x);
  const Vec v = long_vec(fn, m);
  const auto off = fn.offsets(m.src, m.tgt, m.degree);
  const std::size_t fx = fn.roster[m.src].object_image(x),
                    gx = fn.roster[m.tgt].object_image(x);
  return Morphism{fx, gx, m.degree,
                  Vec(v.begin() + off[x], v.begin() + off[x] + fn.b.dim(fx, gx, m.degree))};
}

Morphism nat_from_components(const FunCat& fn, std::size_t s, std::size_t t, int n,
                             const std::vector<Morphism>& parts) {
  if (parts.size() != fn.a.num_objects())
    throw StructuralError("need one component per source object");
  const auto off = fn.offsets(s, t, n);
  Vec v = vec_zero(fn.cat.field(), off.back());
  for (std::size_t x = 0; x < parts.size(); ++x) {
    const std::size_t fx = fn.roster[s].object_image(x), gx = fn.roster[t].object_image(x);
    if (parts[x].src != fx || parts[x].tgt != gx || parts[x].degree != n)
      throw StructuralError("component endpoints or degree do not match the two functors");
    fn.b.check_morphism(parts[x], "functor-category component");
    for (std::size_t j = 0; j < parts[x].coords.size(); ++j) v[off[x] + j] = parts[x].coords[j];
  }
  try {
    return Morphism{s, t, n, slot_coords(fn, s, t, n, v)};
  } catch (const PreconditionError&) {
    throw PreconditionError("component family is not strictly graded-natural");
  }
}

DGFunctor fun_postcompose(const FunCat& src, const FunCat& tgt, const DGFunctor& h) {
  if (!(h.source() == src.b))
    throw StructuralError("fun_postcompose: the whiskering functor must start at the inner target");
  if (!(tgt.a == src.a) || !(tgt.b == h.target()))
    throw StructuralError("fun_postcompose: target functor category has the wrong endpoints");
  DGFunctor F(src.cat, tgt.cat);
  for (std::size_t i = 0; i < src.roster.size(); ++i) {
    const auto j = tgt.find_functor(compose_functors(h, src.roster[i]));
    if (!j)
      throw StructuralError("fun_postcompose: an image functor is missing from the target roster");
    F.set_object_image(i, *j);
  }
  const Window w = src.cat.window();
  for (std::size_t s = 0; s < src.roster.size(); ++s)
    for (std::size_t t = 0; t < src.roster.size(); ++t)
      for (int n = w.lo; n <= w.hi; ++n) {
        const std::size_t dn = src.cat.dim(s, t, n);
        if (!dn) continue;
        const std::size_t is = F.object_image(s), it = F.object_image(t);
        const auto offs = src.offsets(s, t, n);
        const auto offt = tgt.offsets(is, it, n);
        std::vector<Vec> cols;
        for (std::size_t j = 0; j < dn; ++j) {
          const Vec& v = src.basis.at(Key{s, t, n})[j];
          Vec img = vec_zero(src.cat.field(), offt.back());
          for (std::size_t x = 0; x < src.a.num_objects(); ++x) {
            const std::size_t fx = src.roster[s].object_image(x),
                              gx = src.roster[t].object_image(x);
            const std::size_t dimx = src.b.dim(fx, gx, n);
            if (!dimx) continue;
            const Vec block(v.begin() + offs[x], v.begin() + offs[x] + dimx);
            const Vec hb = h.hom_matrix(fx, gx, n).apply(block);
            for (std::size_t r = 0; r < hb.size(); ++r) img[offt[x] + r] = hb[r];
          }
          try {
            cols.push_back(slot_coords(tgt, is, it, n, img));
          } catch (const PreconditionError&) {
            throw StructuralError(
                "fun_postcompose: a whiskered family is not natural in the target");
          }
        }
        F.set_hom_matrix(s, t, n,
                         Matrix::from_columns(src.cat.field(), tgt.cat.dim(is, it, n), cols));
      }
  return F;
}

DGFunctor fun_restrict(const FunCat& src, const FunCat& tgt, const DGFunctor& h) {
  if (!(h.target() == src.a))
    throw StructuralError("fun_restrict: the restriction functor must land in the inner source");
  if (!(tgt.a == h.source()) || !(tgt.b == src.b))
    throw StructuralError("fun_restrict: target functor category has the wrong endpoints");
  DGFunctor F(src.cat, tgt.cat);
  for (std::size_t i = 0; i < src.roster.size(); ++i) {
    const auto j = tgt.find_functor(compose_functors(src.roster[i], h));
    if (!j)
      throw StructuralError("fun_restrict: an image functor is missing from the target roster");
    F.set_object_image(i, *j);
  }
  const Window w = src.cat.window();
  for (std::size_t s = 0; s < src.roster.size(); ++s)
    for (std::size_t t = 0; t < src.roster.size(); ++t)
      for (int n = w.lo; n <= w.hi; ++n) {
        const std::size_t dn = src.cat.dim(s, t, n);
        if (!dn) continue;
        const std::size_t is = F.object_image(s), it = F.object_image(t);
        const auto offs = src.offsets(s, t, n);
        const auto offt = tgt.offsets(is, it, n);
        std::vector<Vec> cols;
        for (std::size_t j = 0; j < dn; ++j) {
          const Vec& v = src.basis.at(Key{s, t, n})[j];
          Vec img = vec_zero(src.cat.field(), offt.back());
          for (std::size_t x = 0; x < tgt.a.num_objects(); ++x) {
            const std::size_t ix = h.object_image(x);
            const std::size_t fx = src.roster[s].object_image(ix),
                              gx = src.roster[t].object_image(ix);
            const std::size_t dimx = src.b.dim(fx, gx, n);
            for (std::size_t r = 0; r < dimx; ++r) img[offt[x] + r] = v[offs[ix] + r];
          }
          try {
            cols.push_back(slot_coords(tgt, is, it, n, img));
          } catch (const PreconditionError&) {
            throw StructuralError(
                "fun_restrict: a restricted family is not natural in the target");
          }
        }
        F.set_hom_matrix(s, t, n,
                         Matrix::from_columns(src.cat.field(), tgt.cat.dim(is, it, n), cols));
      }
  return F;
}

}  // namespace dgcalc
