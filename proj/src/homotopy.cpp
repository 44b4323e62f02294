#include "dgcalc/homotopy.hpp"

#include <string>

#include "dgcalc/errors.hpp"
#include "dgcalc/presentation.hpp"

namespace dgcalc {
namespace {

Scalar pm_one(Field f, long e) {
  return e % 2 != 0 ? -Scalar::one(f) : Scalar::one(f);
}

void require_parallel(const Morphism& f, const Morphism& g) {
  if (f.src != g.src || f.tgt != g.tgt || f.degree != g.degree)
    throw StructuralError("homotopy needs a parallel pair in one hom slot and degree");
}

}  // namespace

bool verify_homotopy(const DGCategoryTab& t, const Morphism& f, const Morphism& g,
                     const Morphism& h) {
  require_parallel(f, g);
  t.check_morphism(f, "homotopy endpoint");
  t.check_morphism(h, "homotopy witness");
  if (h.src != f.src || h.tgt != f.tgt || h.degree != f.degree - 1)
    throw StructuralError("homotopy witness must sit one degree below the pair");
  return morphism_eq(t.differential(h), morphism_add(f, morphism_scale(-Scalar::one(t.field()), g)));
}

std::optional<Morphism> find_homotopy(const DGCategoryTab& t, const Morphism& f,
                                      const Morphism& g) {
  require_parallel(f, g);
  t.check_morphism(f, "homotopy endpoint");
  t.check_morphism(g, "homotopy endpoint");
  t.window().require(f.degree - 1, "homotopy witness degree");
  const Vec rhs = vec_sub(f.coords, g.coords);
  const auto sol = solve_linear(t.diff_matrix(f.src, f.tgt, f.degree - 1), rhs);
  if (!sol) return std::nullopt;
  return Morphism{f.src, f.tgt, f.degree - 1, *sol};
}

bool is_null_homotopic(const DGCategoryTab& t, const Morphism& f) {
  return find_homotopy(t, f, t.zero_morphism(f.src, f.tgt, f.degree)).has_value();
}

Morphism FunctorHomotopy::apply(const Morphism& m) const {
  const DGCategoryTab& a = f.source();
  const DGCategoryTab& b = f.target();
  a.check_morphism(m, "functor homotopy input");
  if (m.degree - 1 < b.window().lo)
    throw WindowError("functor homotopy image degree falls below the window");
  const std::size_t fs = f.object_image(m.src), gt = g.object_image(m.tgt);
  const auto it = comp.find({m.src, m.tgt, m.degree});
  if (it == comp.end())
    return b.zero_morphism(fs, gt, m.degree - 1);
  return Morphism{fs, gt, m.degree - 1, it->second.apply(m.coords)};
}

std::vector<std::string> check_functor_homotopy(const FunctorHomotopy& h) {
  std::vector<std::string> out;
  const DGCategoryTab& a = h.f.source();
  const DGCategoryTab& b = h.f.target();
  if (!(h.g.source() == a) || !(h.g.target() == b)) {
    out.push_back("the two functors do not share their endpoints");
    return out;
  }
  const Window w = a.window();
  const Field k = a.field();

  for (const auto& [key, m] : h.comp) {
    const auto [s, t, n] = key;
    if (n - 1 < b.window().lo) {
      out.push_back("component stored below the window at degree " + std::to_string(n));
      continue;
    }
    const std::size_t rows = b.dim(h.f.object_image(s), h.g.object_image(t), n - 1);
    if (m.rows() != rows || m.cols() != a.dim(s, t, n))
      out.push_back("component matrix shape mismatch at degree " + std::to_string(n));
  }

  for (std::size_t x = 0; x < a.num_objects(); ++x) {
    const Morphism idm = a.identity(x);
    if (idm.degree - 1 < b.window().lo) continue;
    if (!morphism_is_zero(h.apply(idm)))
      out.push_back("does not vanish on the identity of " + a.object_label(x));
  }

  /* defect equation on every basis element */
  for (std::size_t s = 0; s < a.num_objects(); ++s)
    for (std::size_t t = 0; t < a.num_objects(); ++t)
      for (int n = w.lo; n <= w.hi; ++n) {
        if (n - 1 < b.window().lo || n > b.window().hi) continue;
        for (std::size_t i = 0; i < a.dim(s, t, n); ++i) {
          const Morphism f = a.basis_morphism(s, t, n, i);
          Morphism lhs = b.differential(h.apply(f));
          if (n + 1 <= w.hi) lhs = morphism_add(lhs, h.apply(a.differential(f)));
          else if (a.sup_bound() >= n + 1) continue; /* d f not visible */
          const Morphism rhs =
              morphism_add(h.f.apply(f), morphism_scale(-Scalar::one(k), h.g.apply(f)));
          if (!morphism_eq(lhs, rhs))
            out.push_back("defect equation fails on " + a.hom_labels(s, t, n)[i] + " : " +
                          a.object_label(s) + " -> " + a.object_label(t) + " degree " +
                          std::to_string(n));
        }
      }

  /* derivation law on every available composable pair */
  for (std::size_t s = 0; s < a.num_objects(); ++s)
    for (std::size_t mo = 0; mo < a.num_objects(); ++mo)
      for (std::size_t t = 0; t < a.num_objects(); ++t)
        for (int p = w.lo; p <= w.hi; ++p)
          for (int q = w.lo; q <= w.hi; ++q) {
            if (!w.contains(p + q) || p + q - 1 < b.window().lo) continue;
            if (p - 1 < b.window().lo || q - 1 < b.window().lo) continue;
            for (std::size_t i = 0; i < a.dim(mo, t, p); ++i)
              for (std::size_t j = 0; j < a.dim(s, mo, q); ++j) {
                if (!a.composition_available(s, mo, t, p, q, i, j)) continue;
                try {
                  const Morphism f = a.basis_morphism(mo, t, p, i);
                  const Morphism g = a.basis_morphism(s, mo, q, j);
                  const Morphism lhs = h.apply(a.compose(f, g));
                  const Morphism rhs = morphism_add(
                      b.compose(h.apply(f), h.f.apply(g)),
                      morphism_scale(pm_one(k, p), b.compose(h.g.apply(f), h.apply(g))));
                  if (!morphism_eq(lhs, rhs))
                    out.push_back("derivation law fails on " + a.hom_labels(mo, t, p)[i] +
                                  " . " + a.hom_labels(s, mo, q)[j]);
                } catch (const CapError&) {
                } catch (const WindowError&) {
                }
              }
          }
  return out;
}

namespace {

struct SolveCtx {
  const DGCategoryTab& a;
  const DGCategoryTab& b;
  const DGFunctor& F;
  const DGFunctor& G;
  const PresentationLink& link;
  std::map<std::string, std::size_t> obj_of;   /* label -> index in a */
  std::map<std::string, std::size_t> offset;   /* generator -> unknown offset */
  std::map<std::string, std::size_t> udim;     /* generator -> unknown dim */
  std::size_t total = 0;
};

/* rows(w) x total matrix T with h(word) = T u for unknown vector u */
Matrix h_of_word(const SolveCtx& cx, const PWord& w) {
  const Field k = cx.a.field();
  const auto sig = cx.link.pres.signature(w);
  const std::size_t fs = cx.F.object_image(cx.obj_of.at(sig.src));
  const std::size_t gt = cx.G.object_image(cx.obj_of.at(sig.tgt));
  if (sig.degree - 1 < cx.b.window().lo)
    throw WindowError("homotopy solve leaves the window on word " + w.label());
  const std::size_t rows = cx.b.dim(fs, gt, sig.degree - 1);
  if (w.is_identity()) return Matrix(k, rows, cx.total);

  const std::string& u = w.gens[0];
  const PGen& ug = cx.link.pres.generator(u);
  PWord rest;
  if (w.gens.size() == 1)
    rest = pw_id(ug.src);
  else
    rest = PWord{"", std::vector<std::string>(w.gens.begin() + 1, w.gens.end())};
  const auto rsig = cx.link.pres.signature(rest);

  /* h(u) . F(rest) */
  const Morphism frest = cx.F.apply(
      eval_comb(cx.a, cx.obj_of, cx.link.gen_values, pc_term(Scalar::one(k), rest)));
  const Matrix rc = cx.b.right_compose_matrix(frest, gt, ug.degree - 1);
  Matrix out(k, rows, cx.total);
  const std::size_t uoff = cx.offset.at(u), ud = cx.udim.at(u);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < ud; ++c) out.at(r, uoff + c) = rc.at(r, c);

  /* (-1)^deg(u) G(u) . h(rest) */
  const Morphism gu = cx.G.apply(
      eval_comb(cx.a, cx.obj_of, cx.link.gen_values, pc_term(Scalar::one(k), pw({u}))));
  const std::size_t frs = cx.F.object_image(cx.obj_of.at(rsig.src));
  const Matrix lc = cx.b.left_compose_matrix(gu, frs, rsig.degree - 1);
  const Matrix hr = h_of_word(cx, rest);
  const Matrix part = lc * hr;
  const Scalar sg = pm_one(k, ug.degree);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cx.total; ++c)
      out.at(r, c) = out.at(r, c) + sg * part.at(r, c);
  return out;
}

Matrix h_of_comb(const SolveCtx& cx, const PComb& c, std::size_t rows) {
  Matrix out(cx.a.field(), rows, cx.total);
  for (const auto& [w, coeff] : c) {
    const Matrix tw = h_of_word(cx, w);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t cc = 0; cc < cx.total; ++cc)
        out.at(r, cc) = out.at(r, cc) + coeff * tw.at(r, cc);
  }
  return out;
}

}  // namespace

std::optional<FunctorHomotopy> find_functor_homotopy(const DGFunctor& f, const DGFunctor& g) {
  const DGCategoryTab& a = f.source();
  const DGCategoryTab& b = f.target();
  if (!(g.source() == a) || !(g.target() == b))
    throw StructuralError("functor homotopy needs two functors with shared endpoints");
  if (!a.presentation())
    throw PreconditionError("functor homotopy solve needs a presented source category");
  const PresentationLink& link = *a.presentation();
  const Field k = a.field();

  SolveCtx cx{a, b, f, g, link, {}, {}, {}, 0};
  for (std::size_t x = 0; x < a.num_objects(); ++x) cx.obj_of[a.object_label(x)] = x;
  for (const PGen& gen : link.pres.generators()) {
    if (gen.degree - 1 < b.window().lo)
      throw PreconditionError("window too shallow to carry a homotopy for generator " +
                              gen.name);
    const std::size_t fs = f.object_image(cx.obj_of.at(gen.src));
    const std::size_t gt = g.object_image(cx.obj_of.at(gen.tgt));
    const std::size_t d = b.dim(fs, gt, gen.degree - 1);
    cx.offset[gen.name] = cx.total;
    cx.udim[gen.name] = d;
    cx.total += d;
  }

  /* defect equation per generator: d h(x) + h(dx) = F(x) - G(x) */
  std::vector<std::pair<Matrix, Vec>> eqs;
  for (const PGen& gen : link.pres.generators()) {
    if (!b.window().contains(gen.degree)) {
      if (b.sup_bound() >= gen.degree)
        throw PreconditionError("window too shallow to verify the defect equation for " +
                                gen.name);
      continue;
    }
    const std::size_t fs = f.object_image(cx.obj_of.at(gen.src));
    const std::size_t gt = g.object_image(cx.obj_of.at(gen.tgt));
    const std::size_t rows = b.dim(fs, gt, gen.degree);
    const Matrix dm = b.diff_matrix(fs, gt, gen.degree - 1);
    Matrix lhs(k, rows, cx.total);
    const std::size_t off = cx.offset.at(gen.name), ud = cx.udim.at(gen.name);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < ud; ++c) lhs.at(r, off + c) = dm.at(r, c);
    const Matrix hd = h_of_comb(cx, link.pres.gen_diff(gen.name), rows);
    lhs = lhs + hd;
    const Morphism gv = eval_comb(a, cx.obj_of, link.gen_values,
                                  pc_term(Scalar::one(k), pw({gen.name})));
    const Vec rhs = vec_sub(f.apply(gv).coords, g.apply(gv).coords);
    eqs.emplace_back(lhs, rhs);
  }

  std::size_t nrows = 0;
  for (const auto& [m, v] : eqs) nrows += m.rows();
  Matrix sys(k, nrows, cx.total);
  Vec rhs = vec_zero(k, nrows);
  std::size_t r0 = 0;
  for (const auto& [m, v] : eqs) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < cx.total; ++c) sys.at(r0 + r, c) = m.at(r, c);
      rhs[r0 + r] = v[r];
    }
    r0 += m.rows();
  }
  const auto sol = solve_linear(sys, rhs);
  if (!sol) return std::nullopt;

  FunctorHomotopy hh{f, g, {}};
  const Window w = a.window();
  for (std::size_t s = 0; s < a.num_objects(); ++s)
    for (std::size_t t = 0; t < a.num_objects(); ++t)
      for (int n = w.lo; n <= w.hi; ++n) {
        const std::size_t dn = a.dim(s, t, n);
        if (!dn || n - 1 < b.window().lo) continue;
        const auto itw = link.basis_words.find({s, t, n});
        if (itw == link.basis_words.end() || itw->second.size() != dn)
          throw PreconditionError("presented category is missing its basis words");
        std::vector<Vec> cols;
        for (const PWord& wd : itw->second) cols.push_back(h_of_word(cx, wd).apply(*sol));
        const std::size_t rows =
            b.dim(f.object_image(s), g.object_image(t), n - 1);
        hh.comp.emplace(std::tuple<std::size_t, std::size_t, int>{s, t, n},
                        Matrix::from_columns(k, rows, cols));
      }
  return hh;
}

}  // namespace dgcalc
