#include "dgcalc/path.hpp"

#include <string>

#include "dgcalc/errors.hpp"
#include "dgcalc/h0.hpp"

namespace dgcalc {
namespace {

struct SlotDims {
  std::size_t a = 0, b = 0, h = 0;
  std::size_t total() const { return a + b + h; }
};

SlotDims slot_dims(const DGCategoryTab& base, const PathTriple& s, const PathTriple& t, int n) {
  return SlotDims{base.dim(s.x, t.x, n), base.dim(s.y, t.y, n), base.dim(s.x, t.y, n - 1)};
}

Scalar pm_one(Field f, long e) {
  return e % 2 != 0 ? -Scalar::one(f) : Scalar::one(f);
}

void copy_into(Vec& dst, std::size_t off, const Vec& src) {
  for (std::size_t i = 0; i < src.size(); ++i) dst[off + i] = src[i];
}

std::optional<std::size_t> diagonal_index(const PathCat& pc, std::size_t x) {
  for (std::size_t i = 0; i < pc.triples.size(); ++i)
    if (pc.triples[i].x == x && pc.triples[i].y == x &&
        morphism_eq(pc.triples[i].f, pc.base.identity(x)))
      return i;
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> PathCat::find_triple(std::size_t x, std::size_t y,
                                                const Morphism& f) const {
  for (std::size_t i = 0; i < triples.size(); ++i)
    if (triples[i].x == x && triples[i].y == y && morphism_eq(triples[i].f, f)) return i;
  return std::nullopt;
}

PathCat path_cat(const DGCategoryTab& base, const std::vector<PathTriple>& triples) {
  const Window wb = base.window();
  if (wb.lo > -1)
    throw WindowError(
        "path category needs the base window to reach degree -1 (the h blocks sit one degree "
        "lower)");
  const Window wp{wb.lo + 1, wb.hi};
  const Field k = base.field();

  for (const auto& tr : triples) {
    base.object_label(tr.x);
    base.object_label(tr.y);
    if (tr.f.src != tr.x || tr.f.tgt != tr.y || tr.f.degree != 0)
      throw PreconditionError(
          "path triple needs a degree-0 morphism from its first object to its second");
    base.check_morphism(tr.f, "path triple");
    if (!morphism_is_zero(base.differential(tr.f)))
      throw PreconditionError("path triple morphism must be a cocycle");
    if (!is_invertible_h0(base, tr.f))
      throw PreconditionError(
          "path triple morphism must be invertible in degree-0 cohomology");
  }

  PathCat pc{DGCategoryTab(k, wp), base, triples, };
  DGCategoryTab& P = pc.cat;
  P.set_sup_bound(base.sup_bound() + 1);
  P.set_status(base.status());

  for (std::size_t i = 0; i < triples.size(); ++i)
    P.add_object("(" + base.object_label(triples[i].x) + "," +
                 base.object_label(triples[i].y) + ";" + std::to_string(i) + ")");

  /* hom bases: [a | b | h] blocks */
  for (std::size_t s = 0; s < triples.size(); ++s)
    for (std::size_t t = 0; t < triples.size(); ++t)
      for (int n = wp.lo; n <= wp.hi; ++n) {
        const SlotDims d = slot_dims(base, triples[s], triples[t], n);
        if (!d.total()) continue;
        std::vector<std::string> labels;
        labels.reserve(d.total());
        for (const auto& l : base.hom_labels(triples[s].x, triples[t].x, n))
          labels.push_back("a:" + l);
        for (const auto& l : base.hom_labels(triples[s].y, triples[t].y, n))
          labels.push_back("b:" + l);
        for (const auto& l : base.hom_labels(triples[s].x, triples[t].y, n - 1))
          labels.push_back("h:" + l);
        P.set_hom_basis(s, t, n, labels);
      }

  for (std::size_t i = 0; i < triples.size(); ++i) {
    const SlotDims d = slot_dims(base, triples[i], triples[i], 0);
    Vec v = vec_zero(k, d.total());
    copy_into(v, 0, base.identity(triples[i].x).coords);
    copy_into(v, d.a, base.identity(triples[i].y).coords);
    P.set_identity(i, v);
  }

  /* d(a,b,h) = (da, db, dh + (-1)^n (f_t.a - b.f_s)) */
  for (std::size_t s = 0; s < triples.size(); ++s)
    for (std::size_t t = 0; t < triples.size(); ++t)
      for (int n = wp.lo; n < wp.hi; ++n) {
        const PathTriple &S = triples[s], &T = triples[t];
        const SlotDims dn = slot_dims(base, S, T, n), dn1 = slot_dims(base, S, T, n + 1);
        if (!dn.total() && !dn1.total()) continue;
        Matrix m(k, dn1.total(), dn.total());
        if (dn.a) {
          const Matrix& da = base.diff_matrix(S.x, T.x, n);
          for (std::size_t i = 0; i < dn1.a; ++i)
            for (std::size_t j = 0; j < dn.a; ++j) m.at(i, j) = da.at(i, j);
          if (dn1.h) {
            const Matrix lf = base.left_compose_matrix(T.f, S.x, n);
            const Scalar sg = pm_one(k, n);
            for (std::size_t i = 0; i < dn1.h; ++i)
              for (std::size_t j = 0; j < dn.a; ++j)
                m.at(dn1.a + dn1.b + i, j) = sg * lf.at(i, j);
          }
        }
        if (dn.b) {
          const Matrix& db = base.diff_matrix(S.y, T.y, n);
          for (std::size_t i = 0; i < dn1.b; ++i)
            for (std::size_t j = 0; j < dn.b; ++j) m.at(dn1.a + i, dn.a + j) = db.at(i, j);
          if (dn1.h) {
            const Matrix rf = base.right_compose_matrix(S.f, T.y, n);
            const Scalar sg = -pm_one(k, n);
            for (std::size_t i = 0; i < dn1.h; ++i)
              for (std::size_t j = 0; j < dn.b; ++j)
                m.at(dn1.a + dn1.b + i, dn.a + j) = sg * rf.at(i, j);
          }
        }
        if (dn.h) {
          const Matrix& dh = base.diff_matrix(S.x, T.y, n - 1);
          for (std::size_t i = 0; i < dn1.h; ++i)
            for (std::size_t j = 0; j < dn.h; ++j)
              m.at(dn1.a + dn1.b + i, dn.a + dn.b + j) = dh.at(i, j);
        }
        P.set_diff(s, t, n, m);
      }

  /* (a,b,h).(a',b',h') = (a.a', b.b', (-1)^q h.a' + b.h') with q the degree
   * of the second factor; basis elements are pure blocks, so each pair lands
   * in at most one block of the result. */
  bool lossy = false;
  for (std::size_t s = 0; s < triples.size(); ++s)
    for (std::size_t mid = 0; mid < triples.size(); ++mid)
      for (std::size_t t = 0; t < triples.size(); ++t)
        for (int p = wp.lo; p <= wp.hi; ++p)
          for (int q = wp.lo; q <= wp.hi; ++q) {
            if (!wp.contains(p + q)) continue;
            const PathTriple &S = triples[s], &M = triples[mid], &T = triples[t];
            const SlotDims df = slot_dims(base, M, T, p), dg = slot_dims(base, S, M, q);
            const SlotDims dr = slot_dims(base, S, T, p + q);
            if (!df.total() || !dg.total()) continue;
            for (std::size_t i = 0; i < df.total(); ++i)
              for (std::size_t j = 0; j < dg.total(); ++j) {
                std::optional<Vec> val = vec_zero(k, dr.total());
                try {
                  if (i < df.a && j < dg.a) {
                    const Morphism c = base.compose(base.basis_morphism(M.x, T.x, p, i),
                                                    base.basis_morphism(S.x, M.x, q, j));
                    copy_into(*val, 0, c.coords);
                  } else if (i >= df.a && i < df.a + df.b && j >= dg.a && j < dg.a + dg.b) {
                    const Morphism c =
                        base.compose(base.basis_morphism(M.y, T.y, p, i - df.a),
                                     base.basis_morphism(S.y, M.y, q, j - dg.a));
                    copy_into(*val, dr.a, c.coords);
                  } else if (i >= df.a + df.b && j < dg.a) {
                    const Morphism c =
                        base.compose(base.basis_morphism(M.x, T.y, p - 1, i - df.a - df.b),
                                     base.basis_morphism(S.x, M.x, q, j));
                    copy_into(*val, dr.a + dr.b, vec_scale(pm_one(k, q), c.coords));
                  } else if (i >= df.a && i < df.a + df.b && j >= dg.a + dg.b) {
                    const Morphism c =
                        base.compose(base.basis_morphism(M.y, T.y, p, i - df.a),
                                     base.basis_morphism(S.x, M.y, q - 1, j - dg.a - dg.b));
                    copy_into(*val, dr.a + dr.b, c.coords);
                  }
                } catch (const CapError&) {
                  val = std::nullopt;
                  lossy = true;
                }
                P.set_composition_entry(s, mid, t, p, q, i, j, val);
              }
          }
  if (lossy) P.set_status(Tabulation::Truncated);

  /* candidates: (id, f, 0) from each diagonal triple to every triple sharing
   * its source, and lifts (u, u, 0) of base candidates between diagonals */
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (triples[i].x != triples[i].y) continue;
    if (!morphism_eq(triples[i].f, base.identity(triples[i].x))) continue;
    for (std::size_t j = 0; j < triples.size(); ++j) {
      if (j == i || triples[j].x != triples[i].x) continue;
      const SlotDims d = slot_dims(base, triples[i], triples[j], 0);
      Vec v = vec_zero(k, d.total());
      copy_into(v, 0, base.identity(triples[i].x).coords);
      copy_into(v, d.a, triples[j].f.coords);
      P.register_equiv(Morphism{i, j, 0, v});
    }
  }
  for (const Morphism& u : base.registered_equivs()) {
    if (u.degree != 0) continue;
    const auto di = diagonal_index(pc, u.src), dj = diagonal_index(pc, u.tgt);
    if (!di || !dj) continue;
    const SlotDims d = slot_dims(base, triples[*di], triples[*dj], 0);
    Vec v = vec_zero(k, d.total());
    copy_into(v, 0, u.coords);
    copy_into(v, d.a, u.coords);
    P.register_equiv(Morphism{*di, *dj, 0, v});
  }

  return pc;
}

std::vector<PathTriple> path_diagonal(const DGCategoryTab& base) {
  std::vector<PathTriple> out;
  for (std::size_t x = 0; x < base.num_objects(); ++x)
    out.push_back(PathTriple{x, x, base.identity(x)});
  return out;
}

Morphism path_component_a(const PathCat& pc, const Morphism& m) {
  pc.cat.check_morphism(m, "path component");
  const PathTriple &S = pc.triples[m.src], &T = pc.triples[m.tgt];
  const SlotDims d = slot_dims(pc.base, S, T, m.degree);
  return Morphism{S.x, T.x, m.degree, Vec(m.coords.begin(), m.coords.begin() + d.a)};
}

Morphism path_component_b(const PathCat& pc, const Morphism& m) {
  pc.cat.check_morphism(m, "path component");
  const PathTriple &S = pc.triples[m.src], &T = pc.triples[m.tgt];
  const SlotDims d = slot_dims(pc.base, S, T, m.degree);
  return Morphism{S.y, T.y, m.degree,
                  Vec(m.coords.begin() + d.a, m.coords.begin() + d.a + d.b)};
}

Morphism path_component_h(const PathCat& pc, const Morphism& m) {
  pc.cat.check_morphism(m, "path component");
  const PathTriple &S = pc.triples[m.src], &T = pc.triples[m.tgt];
  const SlotDims d = slot_dims(pc.base, S, T, m.degree);
  return Morphism{S.x, T.y, m.degree - 1,
                  Vec(m.coords.begin() + d.a + d.b, m.coords.end())};
}

Morphism path_build(const PathCat& pc, std::size_t s, std::size_t t, const Morphism& a,
                    const Morphism& b, const Morphism& h) {
  if (s >= pc.triples.size() || t >= pc.triples.size())
    throw StructuralError("path_build: triple index out of range");
  const PathTriple &S = pc.triples[s], &T = pc.triples[t];
  const int n = a.degree;
  if (b.degree != n || h.degree != n - 1)
    throw StructuralError("path_build: component degrees must be n, n, n-1");
  if (a.src != S.x || a.tgt != T.x || b.src != S.y || b.tgt != T.y || h.src != S.x ||
      h.tgt != T.y)
    throw StructuralError("path_build: component endpoints do not match the triples");
  pc.cat.window().require(n, "path_build");
  pc.base.check_morphism(a, "path_build a block");
  pc.base.check_morphism(b, "path_build b block");
  pc.base.check_morphism(h, "path_build h block");
  const SlotDims d = slot_dims(pc.base, S, T, n);
  Vec v = vec_zero(pc.base.field(), d.total());
  copy_into(v, 0, a.coords);
  copy_into(v, d.a, b.coords);
  copy_into(v, d.a + d.b, h.coords);
  return Morphism{s, t, n, v};
}

namespace {

DGFunctor path_projection(const PathCat& pc, bool first) {
  /* Target the base seen on the path window so that composing with the
   * diagonal embedding literally gives the identity functor. */
  DGFunctor F(pc.cat, window_restrict(pc.base, pc.cat.window()));
  for (std::size_t i = 0; i < pc.triples.size(); ++i)
    F.set_object_image(i, first ? pc.triples[i].x : pc.triples[i].y);
  const Window wp = pc.cat.window();
  const Field k = pc.base.field();
  for (std::size_t s = 0; s < pc.triples.size(); ++s)
    for (std::size_t t = 0; t < pc.triples.size(); ++t)
      for (int n = wp.lo; n <= wp.hi; ++n) {
        const SlotDims d = slot_dims(pc.base, pc.triples[s], pc.triples[t], n);
        if (!d.total()) continue;
        const std::size_t rows = first ? d.a : d.b, off = first ? 0 : d.a;
        Matrix m(k, rows, d.total());
        for (std::size_t j = 0; j < rows; ++j) m.at(j, off + j) = Scalar::one(k);
        F.set_hom_matrix(s, t, n, m);
      }
  return F;
}

}  // namespace

DGFunctor path_p0(const PathCat& pc) { return path_projection(pc, true); }
DGFunctor path_p1(const PathCat& pc) { return path_projection(pc, false); }

DGFunctor path_i(const PathCat& pc) {
  const DGCategoryTab rb = window_restrict(pc.base, pc.cat.window());
  DGFunctor F(rb, pc.cat);
  std::vector<std::size_t> diag(pc.base.num_objects());
  for (std::size_t x = 0; x < pc.base.num_objects(); ++x) {
    const auto i = diagonal_index(pc, x);
    if (!i)
      throw PreconditionError(
          "diagonal embedding needs a triple (x, x, id) for every base object");
    diag[x] = *i;
    F.set_object_image(x, *i);
  }
  const Window wp = pc.cat.window();
  const Field k = pc.base.field();
  for (std::size_t x = 0; x < pc.base.num_objects(); ++x)
    for (std::size_t y = 0; y < pc.base.num_objects(); ++y)
      for (int n = wp.lo; n <= wp.hi; ++n) {
        const std::size_t cols = rb.dim(x, y, n);
        if (!cols) continue;
        const SlotDims d = slot_dims(pc.base, pc.triples[diag[x]], pc.triples[diag[y]], n);
        Matrix m(k, d.total(), cols);
        for (std::size_t j = 0; j < cols; ++j) {
          m.at(j, j) = Scalar::one(k);
          m.at(d.a + j, j) = Scalar::one(k);
        }
        F.set_hom_matrix(x, y, n, m);
      }
  return F;
}

std::optional<Morphism> path_contraction(const PathCat& pc, std::size_t i) {
  if (i >= pc.triples.size()) throw StructuralError("path triple index out of range");
  if (pc.base.window().lo > -2)
    throw WindowError("path contraction needs the base window to reach degree -2");
  const PathTriple& T = pc.triples[i];
  const auto cx = contraction(pc.base, T.x);
  const auto cy = contraction(pc.base, T.y);
  if (!cx || !cy) return std::nullopt;
  const Morphism h = pc.base.compose(*cy, pc.base.compose(T.f, *cx));
  return path_build(pc, i, i, *cx, *cy, h);
}

std::vector<std::string> path_projection_failures(const PathCat& pc) {
  std::vector<std::string> out;
  const Window wp = pc.cat.window();
  const Field k = pc.base.field();
  for (std::size_t s = 0; s < pc.triples.size(); ++s)
    for (std::size_t t = 0; t < pc.triples.size(); ++t)
      for (int n = wp.lo; n <= wp.hi; ++n) {
        const SlotDims d = slot_dims(pc.base, pc.triples[s], pc.triples[t], n);
        if (!d.a && !d.b) continue;
        Matrix m(k, d.a + d.b, d.total());
        for (std::size_t j = 0; j < d.a + d.b; ++j) m.at(j, j) = Scalar::one(k);
        if (rank(m) < d.a + d.b)
          out.push_back("Hom(" + pc.cat.object_label(s) + ", " + pc.cat.object_label(t) +
                        ") degree " + std::to_string(n) +
                        ": joint (a,b) projection is not onto");
      }
  return out;
}

}  // namespace dgcalc
