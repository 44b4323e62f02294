#include "dgcalc/tensor.hpp"

#include <algorithm>

namespace dgcalc {

namespace {

/* One degree splitting p + q = n inside Hom((x,y),(x',y'))^n: a
 * dimA(p) x dimB(q) grid of basis pairs, laid out row-major after
 * `offset`. */
struct Block {
  int p, q;
  std::size_t di, dj, offset;
};

std::vector<Block> slot_blocks(const DGCategoryTab& a, const DGCategoryTab& b, std::size_t xa,
                               std::size_t xa2, std::size_t yb, std::size_t yb2, int n) {
  std::vector<Block> out;
  std::size_t off = 0;
  for (int p = a.window().lo; p <= a.window().hi; ++p) {
    const int q = n - p;
    if (!b.window().contains(q)) continue;
    const std::size_t di = a.dim(xa, xa2, p), dj = b.dim(yb, yb2, q);
    if (di == 0 || dj == 0) continue;
    out.push_back({p, q, di, dj, off});
    off += di * dj;
  }
  return out;
}

std::size_t blocks_dim(const std::vector<Block>& bl) {
  return bl.empty() ? 0 : bl.back().offset + bl.back().di * bl.back().dj;
}

const Block* find_block(const std::vector<Block>& bl, int p, int q) {
  for (const Block& blk : bl)
    if (blk.p == p && blk.q == q) return &blk;
  return nullptr;
}

/* v += sign * (cf tensor cg) placed at splitting (p, q). A missing block
 * means the slot is zero there; the coordinates must then be zero too. */
void place(Vec& v, const std::vector<Block>& bl, int p, int q, const Vec& cf, const Vec& cg,
           const Scalar& sign) {
  const Block* blk = find_block(bl, p, q);
  if (!blk) {
    if (!vec_is_zero(cf) && !vec_is_zero(cg))
      throw StructuralError("tensor: nonzero coordinates land outside the tabulated blocks");
    return;
  }
  for (std::size_t i = 0; i < blk->di; ++i) {
    if (cf[i].is_zero()) continue;
    for (std::size_t j = 0; j < blk->dj; ++j) {
      if (cg[j].is_zero()) continue;
      v[blk->offset + i * blk->dj + j] += sign * cf[i] * cg[j];
    }
  }
}

Scalar pm_one(Field f, int exponent) {
  return (exponent % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
}

} // namespace

std::size_t TensorCat::obj_index(std::size_t x, std::size_t y) const {
  if (x >= a.num_objects() || y >= b.num_objects())
    throw PreconditionError("tensor: factor object out of range");
  return x * b.num_objects() + y;
}

TensorCat tensor_cat(const DGCategoryTab& a, const DGCategoryTab& b) {
  if (!(a.field() == b.field())) throw StructuralError("tensor_cat: factors over different fields");
  const Field f = a.field();
  const int lo = std::max(a.window().lo + b.sup_bound(), b.window().lo + a.sup_bound());
  const int hi = std::min(a.window().hi, b.window().hi);
  if (lo > 0 || hi < 0)
    throw WindowError("tensor_cat: derived window [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "] does not contain degree 0");

  TensorCat t{DGCategoryTab(f, Window{lo, hi}), a, b, {}};
  DGCategoryTab& c = t.cat;
  bool lossy = false;
  const std::size_t na = a.num_objects(), nb = b.num_objects();

  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y) {
      c.add_object("(" + a.object_label(x) + "," + b.object_label(y) + ")");
      t.objs.emplace_back(x, y);
    }

  for (std::size_t s = 0; s < t.objs.size(); ++s)
    for (std::size_t u = 0; u < t.objs.size(); ++u) {
      const auto [xa, yb] = t.objs[s];
      const auto [xa2, yb2] = t.objs[u];
      for (int n = lo; n <= hi; ++n) {
        const auto bl = slot_blocks(a, b, xa, xa2, yb, yb2, n);
        if (bl.empty()) continue;
        std::vector<std::string> labels;
        labels.reserve(blocks_dim(bl));
        for (const Block& blk : bl) {
          const auto& la = a.hom_labels(xa, xa2, blk.p);
          const auto& lb = b.hom_labels(yb, yb2, blk.q);
          for (std::size_t i = 0; i < blk.di; ++i)
            for (std::size_t j = 0; j < blk.dj; ++j)
              labels.push_back(la[i] + " (x) " + lb[j]);
        }
        c.set_hom_basis(s, u, n, std::move(labels));
      }
    }

  // identities
  for (std::size_t s = 0; s < t.objs.size(); ++s) {
    const auto [xa, yb] = t.objs[s];
    const auto bl = slot_blocks(a, b, xa, xa, yb, yb, 0);
    Vec id = vec_zero(f, blocks_dim(bl));
    place(id, bl, 0, 0, a.identity(xa).coords, b.identity(yb).coords, Scalar::one(f));
    c.set_identity(s, std::move(id));
  }

  // differentials: d(f (x) g) = df (x) g + (-1)^p f (x) dg
  for (std::size_t s = 0; s < t.objs.size(); ++s)
    for (std::size_t u = 0; u < t.objs.size(); ++u) {
      const auto [xa, yb] = t.objs[s];
      const auto [xa2, yb2] = t.objs[u];
      for (int n = lo; n < hi; ++n) {
        const auto bl = slot_blocks(a, b, xa, xa2, yb, yb2, n);
        const auto bl1 = slot_blocks(a, b, xa, xa2, yb, yb2, n + 1);
        if (bl.empty()) continue;
        Matrix d(f, blocks_dim(bl1), blocks_dim(bl));
        for (const Block& blk : bl)
          for (std::size_t i = 0; i < blk.di; ++i)
            for (std::size_t j = 0; j < blk.dj; ++j) {
              const std::size_t col = blk.offset + i * blk.dj + j;
              if (a.window().contains(blk.p + 1)) {
                const Matrix& da = a.diff_matrix(xa, xa2, blk.p);
                if (const Block* tb = find_block(bl1, blk.p + 1, blk.q))
                  for (std::size_t i2 = 0; i2 < tb->di; ++i2)
                    d.at(tb->offset + i2 * tb->dj + j, col) += da.at(i2, i);
              } else if (blk.p + 1 <= a.sup_bound()) {
                lossy = true;
              }
              if (b.window().contains(blk.q + 1)) {
                const Matrix& db = b.diff_matrix(yb, yb2, blk.q);
                const Scalar sign = pm_one(f, blk.p);
                if (const Block* tb = find_block(bl1, blk.p, blk.q + 1))
                  for (std::size_t j2 = 0; j2 < tb->dj; ++j2)
                    d.at(tb->offset + i * tb->dj + j2, col) += sign * db.at(j2, j);
              } else if (blk.q + 1 <= b.sup_bound()) {
                lossy = true;
              }
            }
        if (!d.is_zero()) c.set_diff(s, u, n, std::move(d));
      }
    }

  // composition: (f (x) g) . (f' (x) g') = (-1)^(q p') (f.f') (x) (g.g')
  for (std::size_t s = 0; s < t.objs.size(); ++s)
    for (std::size_t m = 0; m < t.objs.size(); ++m)
      for (std::size_t u = 0; u < t.objs.size(); ++u) {
        const auto [sa, sb] = t.objs[s];
        const auto [ma, mb] = t.objs[m];
        const auto [ua, ub] = t.objs[u];
        for (int p = lo; p <= hi; ++p)
          for (int q = lo; q <= hi; ++q) {
            if (!c.window().contains(p + q)) continue;
            const auto blf = slot_blocks(a, b, ma, ua, mb, ub, p);
            const auto blg = slot_blocks(a, b, sa, ma, sb, mb, q);
            if (blf.empty() || blg.empty()) continue;
            const auto blr = slot_blocks(a, b, sa, ua, sb, ub, p + q);
            for (const Block& bf : blf)
              for (std::size_t i = 0; i < bf.di; ++i)
                for (std::size_t j = 0; j < bf.dj; ++j)
                  for (const Block& bg : blg)
                    for (std::size_t i2 = 0; i2 < bg.di; ++i2)
                      for (std::size_t j2 = 0; j2 < bg.dj; ++j2) {
                        const std::size_t row = bf.offset + i * bf.dj + j;
                        const std::size_t col = bg.offset + i2 * bg.dj + j2;
                        std::optional<Vec> value;
                        const int ja = bf.p + bg.p, jb = bf.q + bg.q;
                        const bool a_zero = !a.window().contains(ja) && ja > a.sup_bound();
                        const bool b_zero = !b.window().contains(jb) && jb > b.sup_bound();
                        if (a_zero || b_zero) {
                          value = vec_zero(f, blocks_dim(blr));
                        } else if (a.window().contains(ja) && b.window().contains(jb)) {
                          try {
                            Morphism fa = a.compose(a.basis_morphism(ma, ua, bf.p, i),
                                                    a.basis_morphism(sa, ma, bg.p, i2));
                            Morphism gb = b.compose(b.basis_morphism(mb, ub, bf.q, j),
                                                    b.basis_morphism(sb, mb, bg.q, j2));
                            Vec v = vec_zero(f, blocks_dim(blr));
                            place(v, blr, ja, jb, fa.coords, gb.coords,
                                  pm_one(f, bf.q * bg.p));
                            value = std::move(v);
                          } catch (const CapError&) {
                            lossy = true;
                          }
                        } else {
                          lossy = true; // junction degree invisible in a factor
                        }
                        c.set_composition_entry(s, m, u, p, q, row, col, std::move(value));
                      }
          }
      }

  c.set_sup_bound(a.sup_bound() + b.sup_bound());
  c.set_status((a.status() == Tabulation::Complete && b.status() == Tabulation::Complete && !lossy)
                   ? Tabulation::Complete
                   : Tabulation::Truncated);
  return t;
}

Morphism tensor_morphism(const TensorCat& t, const Morphism& f, const Morphism& g) {
  t.a.check_morphism(f, "tensor_morphism (left factor)");
  t.b.check_morphism(g, "tensor_morphism (right factor)");
  const int n = f.degree + g.degree;
  t.cat.window().require(n, "tensor_morphism");
  const std::size_t s = t.obj_index(f.src, g.src), u = t.obj_index(f.tgt, g.tgt);
  const auto bl = slot_blocks(t.a, t.b, f.src, f.tgt, g.src, g.tgt, n);
  Vec v = vec_zero(t.cat.field(), blocks_dim(bl));
  place(v, bl, f.degree, g.degree, f.coords, g.coords, Scalar::one(t.cat.field()));
  return Morphism{s, u, n, std::move(v)};
}

DGFunctor tensor_functor(const TensorCat& src, const TensorCat& tgt, const DGFunctor& f,
                         const DGFunctor& g) {
  if (!(f.source() == src.a) || !(g.source() == src.b) || !(f.target() == tgt.a) ||
      !(g.target() == tgt.b))
    throw StructuralError("tensor_functor: factor functors do not match the tensor categories");
  DGFunctor out(src.cat, tgt.cat);
  for (std::size_t s = 0; s < src.objs.size(); ++s)
    out.set_object_image(s, tgt.obj_index(f.object_image(src.objs[s].first),
                                          g.object_image(src.objs[s].second)));
  for (std::size_t s = 0; s < src.objs.size(); ++s)
    for (std::size_t u = 0; u < src.objs.size(); ++u) {
      const auto [xa, yb] = src.objs[s];
      const auto [xa2, yb2] = src.objs[u];
      const std::size_t fs = out.object_image(s), fu = out.object_image(u);
      for (int n = src.cat.window().lo; n <= src.cat.window().hi; ++n) {
        if (src.cat.dim(s, u, n) == 0 || !tgt.cat.window().contains(n)) continue;
        const auto bl = slot_blocks(src.a, src.b, xa, xa2, yb, yb2, n);
        const auto blo = slot_blocks(tgt.a, tgt.b, tgt.objs[fs].first, tgt.objs[fu].first,
                                     tgt.objs[fs].second, tgt.objs[fu].second, n);
        Matrix m(src.cat.field(), blocks_dim(blo), blocks_dim(bl));
        for (const Block& blk : bl) {
          const Matrix& mf = f.hom_matrix(xa, xa2, blk.p);
          const Matrix& mg = g.hom_matrix(yb, yb2, blk.q);
          for (std::size_t i = 0; i < blk.di; ++i)
            for (std::size_t j = 0; j < blk.dj; ++j) {
              Vec col = vec_zero(src.cat.field(), blocks_dim(blo));
              place(col, blo, blk.p, blk.q, mf.column(i), mg.column(j),
                    Scalar::one(src.cat.field()));
              for (std::size_t r = 0; r < col.size(); ++r)
                if (!col[r].is_zero()) m.at(r, blk.offset + i * blk.dj + j) = col[r];
            }
        }
        out.set_hom_matrix(s, u, n, std::move(m));
      }
    }
  return out;
}

DGFunctor swap_functor(const TensorCat& ab, const TensorCat& ba) {
  if (!(ab.a == ba.b) || !(ab.b == ba.a))
    throw StructuralError("swap_functor: the two tensor categories are not mirror images");
  DGFunctor out(ab.cat, ba.cat);
  const Field f = ab.cat.field();
  for (std::size_t s = 0; s < ab.objs.size(); ++s)
    out.set_object_image(s, ba.obj_index(ab.objs[s].second, ab.objs[s].first));
  for (std::size_t s = 0; s < ab.objs.size(); ++s)
    for (std::size_t u = 0; u < ab.objs.size(); ++u) {
      const auto [xa, yb] = ab.objs[s];
      const auto [xa2, yb2] = ab.objs[u];
      for (int n = ab.cat.window().lo; n <= ab.cat.window().hi; ++n) {
        if (ab.cat.dim(s, u, n) == 0) continue;
        const auto bl = slot_blocks(ab.a, ab.b, xa, xa2, yb, yb2, n);
        const auto blo = slot_blocks(ba.a, ba.b, yb, yb2, xa, xa2, n);
        Matrix m(f, blocks_dim(blo), blocks_dim(bl));
        for (const Block& blk : bl) {
          const Block* tb = find_block(blo, blk.q, blk.p);
          if (!tb) throw StructuralError("swap_functor: mirrored block is missing");
          const Scalar sign = pm_one(f, blk.p * blk.q);
          for (std::size_t i = 0; i < blk.di; ++i)
            for (std::size_t j = 0; j < blk.dj; ++j)
              m.at(tb->offset + j * tb->dj + i, blk.offset + i * blk.dj + j) = sign;
        }
        out.set_hom_matrix(s, u, n, std::move(m));
      }
    }
  return out;
}

DGFunctor left_unit_functor(const TensorCat& ka) {
  const DGCategoryTab& k = ka.a;
  bool point = k.num_objects() == 1;
  if (point)
    for (int n = k.window().lo; n <= k.window().hi; ++n)
      if (k.dim(0, 0, n) != (n == 0 ? 1u : 0u)) point = false;
  if (point && !(k.identity(0).coords == Vec{Scalar::one(k.field())})) point = false;
  if (!point)
    throw PreconditionError("left_unit_functor: the left factor is not a point");

  DGFunctor out(ka.cat, ka.b);
  for (std::size_t s = 0; s < ka.objs.size(); ++s) out.set_object_image(s, ka.objs[s].second);
  for (std::size_t s = 0; s < ka.objs.size(); ++s)
    for (std::size_t u = 0; u < ka.objs.size(); ++u)
      for (int n = ka.cat.window().lo; n <= ka.cat.window().hi; ++n) {
        const std::size_t d = ka.cat.dim(s, u, n);
        if (d == 0) continue;
        if (d != ka.b.dim(ka.objs[s].second, ka.objs[u].second, n))
          throw StructuralError("left_unit_functor: block layout mismatch");
        out.set_hom_matrix(s, u, n, Matrix::identity(ka.cat.field(), d));
      }
  return out;
}

} // namespace dgcalc
