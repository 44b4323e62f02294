#include "dgcalc/quotient.hpp"

#include <set>
#include <string>

#include "dgcalc/errors.hpp"

namespace dgcalc {
namespace {

using Key = std::tuple<std::size_t, std::size_t, int>;

Scalar pm_one(Field f, long e) {
  return e % 2 != 0 ? -Scalar::one(f) : Scalar::one(f);
}

std::vector<long> word_key(const QWord& w) {
  std::vector<long> k;
  k.push_back(static_cast<long>(w.zs.size()));
  for (const auto z : w.zs) k.push_back(static_cast<long>(z));
  for (const auto d : w.degs) k.push_back(d);
  for (const auto i : w.idx) k.push_back(static_cast<long>(i));
  return k;
}

std::size_t f_src(const QWord& w, std::size_t s, std::size_t i) {
  return i == 0 ? s : w.zs[i - 1];
}
std::size_t f_tgt(const QWord& w, std::size_t t, std::size_t i) {
  return i == w.zs.size() ? t : w.zs[i];
}

/* words from cur to t carrying k_left more h's, with deg_left the f-slot
 * degree sum still to realize; f_0-side slots are chosen first */
void enumerate_rec(const DGCategoryTab& a, const std::vector<std::size_t>& zlist,
                   std::size_t cur, std::size_t t, int deg_left, std::size_t k_left, QWord& acc,
                   std::vector<QWord>& out) {
  const int lo = a.window().lo;
  if (k_left == 0) {
    if (deg_left < lo || deg_left > 0) return;
    const std::size_t d = a.dim(cur, t, deg_left);
    for (std::size_t i = 0; i < d; ++i) {
      acc.degs.push_back(deg_left);
      acc.idx.push_back(i);
      out.push_back(acc);
      acc.degs.pop_back();
      acc.idx.pop_back();
    }
    return;
  }
  for (const std::size_t z : zlist)
    for (int d0 = lo; d0 <= 0; ++d0) {
      const int rest = deg_left - d0;
      /* the rest spreads over k_left slots, each of degree in [lo, 0] */
      if (rest > 0 || static_cast<long>(rest) < static_cast<long>(k_left) * lo) continue;
      const std::size_t dim = a.dim(cur, z, d0);
      for (std::size_t i = 0; i < dim; ++i) {
        acc.degs.push_back(d0);
        acc.idx.push_back(i);
        acc.zs.push_back(z);
        enumerate_rec(a, zlist, z, t, rest, k_left - 1, acc, out);
        acc.zs.pop_back();
        acc.degs.pop_back();
        acc.idx.pop_back();
      }
    }
}

std::vector<QWord> enumerate_words(const DGCategoryTab& a, const std::vector<std::size_t>& zlist,
                                   std::size_t s, std::size_t t, int n) {
  std::vector<QWord> out;
  for (std::size_t k = 0; static_cast<long>(k) <= std::max(0L, -static_cast<long>(n)); ++k) {
    QWord acc;
    enumerate_rec(a, zlist, s, t, n + static_cast<int>(k), k, acc, out);
  }
  return out;
}

std::map<std::vector<long>, std::size_t> slot_index(const std::vector<QWord>& ws) {
  std::map<std::vector<long>, std::size_t> m;
  for (std::size_t i = 0; i < ws.size(); ++i) m.emplace(word_key(ws[i]), i);
  return m;
}

std::string word_label(const DGCategoryTab& a, const QWord& w, std::size_t s, std::size_t t) {
  const std::size_t K = w.zs.size();
  if (K == 0) return a.hom_labels(s, t, w.degs[0])[w.idx[0]];
  std::string out;
  for (std::size_t i = K + 1; i-- > 0;) {
    out += a.hom_labels(f_src(w, s, i), f_tgt(w, t, i), w.degs[i])[w.idx[i]] + "[" +
           std::to_string(w.degs[i]) + "]";
    if (i > 0) out += "*h(" + a.object_label(w.zs[i - 1]) + ")*";
  }
  return out;
}

/* degree of everything written to the left of f slot i */
long prefix_deg_f(const QWord& w, std::size_t i) {
  long p = -(static_cast<long>(w.zs.size()) - static_cast<long>(i));
  for (std::size_t j = i + 1; j < w.degs.size(); ++j) p += w.degs[j];
  return p;
}

/* degree of everything written to the left of h slot j (1-based) */
long prefix_deg_h(const QWord& w, std::size_t j) {
  long p = -(static_cast<long>(w.zs.size()) - static_cast<long>(j));
  for (std::size_t i = j; i < w.degs.size(); ++i) p += w.degs[i];
  return p;
}

QWord remove_h(const QWord& w, std::size_t j, int merged_deg, std::size_t merged_idx) {
  QWord r;
  r.zs = w.zs;
  r.zs.erase(r.zs.begin() + static_cast<long>(j) - 1);
  r.degs.assign(w.degs.begin(), w.degs.begin() + static_cast<long>(j) - 1);
  r.degs.push_back(merged_deg);
  r.degs.insert(r.degs.end(), w.degs.begin() + static_cast<long>(j) + 1, w.degs.end());
  r.idx.assign(w.idx.begin(), w.idx.begin() + static_cast<long>(j) - 1);
  r.idx.push_back(merged_idx);
  r.idx.insert(r.idx.end(), w.idx.begin() + static_cast<long>(j) + 1, w.idx.end());
  return r;
}

}  // namespace

QuotientCat drinfeld_quotient(const DGCategoryTab& base,
                              const std::vector<std::size_t>& contracted) {
  if (base.status() != Tabulation::Complete)
    throw PreconditionError("contracting objects needs a complete base tabulation");
  if (base.sup_bound() > 0)
    throw PreconditionError("contracting objects needs a base with degree bound at most 0");
  std::set<std::size_t> seen;
  for (const std::size_t z : contracted) {
    base.object_label(z);
    if (!seen.insert(z).second)
      throw StructuralError("contracted object listed twice");
  }
  const Field k = base.field();
  const Window w = base.window();

  QuotientCat q{DGCategoryTab(k, w), base, contracted, {}};
  DGCategoryTab& Q = q.cat;
  Q.set_sup_bound(base.sup_bound());
  Q.set_status(Tabulation::Complete);
  for (std::size_t x = 0; x < base.num_objects(); ++x) Q.add_object(base.object_label(x));

  std::map<Key, std::map<std::vector<long>, std::size_t>> index;
  for (std::size_t s = 0; s < base.num_objects(); ++s)
    for (std::size_t t = 0; t < base.num_objects(); ++t)
      for (int n = w.lo; n <= w.hi; ++n) {
        auto ws = enumerate_words(base, contracted, s, t, n);
        if (ws.empty()) continue;
        std::vector<std::string> labels;
        for (const auto& wd : ws) labels.push_back(word_label(base, wd, s, t));
        Q.set_hom_basis(s, t, n, labels);
        index.emplace(Key{s, t, n}, slot_index(ws));
        q.words.emplace(Key{s, t, n}, std::move(ws));
      }

  for (std::size_t x = 0; x < base.num_objects(); ++x) {
    Vec v = vec_zero(k, Q.dim(x, x, 0));
    const Vec& id = base.identity(x).coords;
    for (std::size_t j = 0; j < id.size(); ++j) v[j] = id[j];
    Q.set_identity(x, v);
  }

  /* differential: Leibniz over the factors; d h(z) = id merges neighbours */
  for (std::size_t s = 0; s < base.num_objects(); ++s)
    for (std::size_t t = 0; t < base.num_objects(); ++t)
      for (int n = w.lo; n < w.hi; ++n) {
        const std::size_t dn = Q.dim(s, t, n), dn1 = Q.dim(s, t, n + 1);
        if (!dn) continue;  /* no columns: the zero default already applies */
        const auto& ws = q.words.at(Key{s, t, n});
        const std::map<std::vector<long>, std::size_t> empty_ix;
        const auto& ix1 = dn1 ? index.at(Key{s, t, n + 1}) : empty_ix;
        Matrix m(k, dn1, dn);
        for (std::size_t col = 0; col < dn; ++col) {
          const QWord& wd = ws[col];
          const std::size_t K = wd.zs.size();
          for (std::size_t i = 0; i <= K; ++i) {
            const int di = wd.degs[i];
            if (di + 1 > 0) continue;
            const std::size_t src = f_src(wd, s, i), tgt = f_tgt(wd, t, i);
            if (!base.dim(src, tgt, di + 1)) continue;
            const Matrix& dm = base.diff_matrix(src, tgt, di);
            const Scalar sg = pm_one(k, prefix_deg_f(wd, i));
            for (std::size_t al = 0; al < dm.rows(); ++al) {
              const Scalar c = dm.at(al, wd.idx[i]);
              if (c == Scalar::zero(k)) continue;
              QWord w2 = wd;
              w2.degs[i] = di + 1;
              w2.idx[i] = al;
              const std::size_t r = ix1.at(word_key(w2));
              m.at(r, col) = m.at(r, col) + sg * c;
            }
          }
          for (std::size_t j = 1; j <= K; ++j) {
            const std::size_t from = f_src(wd, s, j - 1), mid = wd.zs[j - 1],
                              to = f_tgt(wd, t, j);
            const Morphism c =
                base.compose(base.basis_morphism(mid, to, wd.degs[j], wd.idx[j]),
                             base.basis_morphism(from, mid, wd.degs[j - 1], wd.idx[j - 1]));
            const Scalar sg = pm_one(k, prefix_deg_h(wd, j));
            for (std::size_t al = 0; al < c.coords.size(); ++al) {
              if (c.coords[al] == Scalar::zero(k)) continue;
              const QWord w2 = remove_h(wd, j, wd.degs[j] + wd.degs[j - 1], al);
              const std::size_t r = ix1.at(word_key(w2));
              m.at(r, col) = m.at(r, col) + sg * c.coords[al];
            }
          }
        }
        Q.set_diff(s, t, n, m);
      }

  /* composition: concatenate, expanding the junction product */
  for (std::size_t s = 0; s < base.num_objects(); ++s)
    for (std::size_t mo = 0; mo < base.num_objects(); ++mo)
      for (std::size_t t = 0; t < base.num_objects(); ++t)
        for (int p = w.lo; p <= w.hi; ++p)
          for (int qd = w.lo; qd <= w.hi; ++qd) {
            if (!w.contains(p + qd)) continue;
            const std::size_t dp = Q.dim(mo, t, p), dq = Q.dim(s, mo, qd);
            if (!dp || !dq) continue;
            const auto& wf = q.words.at(Key{mo, t, p});
            const auto& wg = q.words.at(Key{s, mo, qd});
            /* an empty result slot forces every junction product to zero:
             * a nonzero coefficient would exhibit a word living there */
            const std::size_t dr = Q.dim(s, t, p + qd);
            const auto* ixr = dr ? &index.at(Key{s, t, p + qd}) : nullptr;
            for (std::size_t i = 0; i < dp; ++i)
              for (std::size_t j = 0; j < dq; ++j) {
                const QWord &w2 = wf[i], &w1 = wg[j];
                const std::size_t k1 = w1.zs.size();
                Vec val = vec_zero(k, dr);
                const Morphism c = base.compose(
                    base.basis_morphism(f_src(w2, mo, 0), f_tgt(w2, t, 0), w2.degs[0],
                                        w2.idx[0]),
                    base.basis_morphism(f_src(w1, s, k1), mo, w1.degs[k1], w1.idx[k1]));
                for (std::size_t al = 0; al < c.coords.size(); ++al) {
                  if (c.coords[al] == Scalar::zero(k)) continue;
                  QWord r;
                  r.zs = w1.zs;
                  r.zs.insert(r.zs.end(), w2.zs.begin(), w2.zs.end());
                  r.degs.assign(w1.degs.begin(), w1.degs.end() - 1);
                  r.degs.push_back(w1.degs[k1] + w2.degs[0]);
                  r.degs.insert(r.degs.end(), w2.degs.begin() + 1, w2.degs.end());
                  r.idx.assign(w1.idx.begin(), w1.idx.end() - 1);
                  r.idx.push_back(al);
                  r.idx.insert(r.idx.end(), w2.idx.begin() + 1, w2.idx.end());
                  if (!ixr)
                    throw StructuralError("quotient composition hit a word outside its slot");
                  const std::size_t rix = ixr->at(word_key(r));
                  val[rix] = val[rix] + c.coords[al];
                }
                Q.set_composition_entry(s, mo, t, p, qd, i, j, val);
              }
          }

  return q;
}

DGFunctor quotient_eta(const QuotientCat& q) {
  DGFunctor F(q.base, q.cat);
  for (std::size_t x = 0; x < q.base.num_objects(); ++x) F.set_object_image(x, x);
  const Window w = q.base.window();
  const Field k = q.base.field();
  for (std::size_t s = 0; s < q.base.num_objects(); ++s)
    for (std::size_t t = 0; t < q.base.num_objects(); ++t)
      for (int n = w.lo; n <= w.hi; ++n) {
        const std::size_t cols = q.base.dim(s, t, n);
        if (!cols) continue;
        Matrix m(k, q.cat.dim(s, t, n), cols);
        for (std::size_t j = 0; j < cols; ++j) m.at(j, j) = Scalar::one(k);
        F.set_hom_matrix(s, t, n, m);
      }
  return F;
}

Morphism quotient_h(const QuotientCat& q, std::size_t z) {
  bool listed = false;
  for (const std::size_t c : q.contracted) listed = listed || c == z;
  if (!listed) throw PreconditionError("no contracting endomorphism: object is not contracted");
  if (q.cat.window().lo > -1)
    throw WindowError("the contracting endomorphism sits at degree -1, outside the window");
  const Field k = q.cat.field();
  const Vec& id = q.base.identity(z).coords;
  const auto& ws = q.words.at(Key{z, z, -1});
  const auto ix = slot_index(ws);
  Vec v = vec_zero(k, q.cat.dim(z, z, -1));
  for (std::size_t al = 0; al < id.size(); ++al)
    for (std::size_t be = 0; be < id.size(); ++be) {
      if (id[al] == Scalar::zero(k) || id[be] == Scalar::zero(k)) continue;
      QWord w;
      w.zs = {z};
      w.degs = {0, 0};
      w.idx = {be, al};
      const std::size_t r = ix.at(word_key(w));
      v[r] = v[r] + id[al] * id[be];
    }
  return Morphism{z, z, -1, v};
}

DGFunctor quotient_induced_functor(const QuotientCat& qa, const QuotientCat& qb,
                                   const DGFunctor& f) {
  if (!(f.source() == qa.base) || !(f.target() == qb.base))
    throw StructuralError("induced functor needs a base functor between the two bases");
  if (!(qa.cat.window() == qb.cat.window()))
    throw StructuralError("induced functor needs both quotients on one window");
  for (const std::size_t z : qa.contracted) {
    bool ok = false;
    for (const std::size_t zb : qb.contracted) ok = ok || f.object_image(z) == zb;
    if (!ok)
      throw PreconditionError(
          "induced functor needs contracted objects to land on contracted objects");
  }
  const Field k = qa.cat.field();
  const Window w = qa.cat.window();
  DGFunctor G(qa.cat, qb.cat);
  for (std::size_t x = 0; x < qa.base.num_objects(); ++x)
    G.set_object_image(x, f.object_image(x));

  for (std::size_t s = 0; s < qa.base.num_objects(); ++s)
    for (std::size_t t = 0; t < qa.base.num_objects(); ++t)
      for (int n = w.lo; n <= w.hi; ++n) {
        const std::size_t cols = qa.cat.dim(s, t, n);
        if (!cols) continue;
        const std::size_t fs = f.object_image(s), ft = f.object_image(t);
        const std::size_t rows = qb.cat.dim(fs, ft, n);
        const auto itw = qb.words.find(Key{fs, ft, n});
        const auto ixr = itw == qb.words.end() ? std::map<std::vector<long>, std::size_t>{}
                                               : slot_index(itw->second);
        const auto& ws = qa.words.at(Key{s, t, n});
        Matrix m(k, rows, cols);
        for (std::size_t col = 0; col < cols; ++col) {
          const QWord& wd = ws[col];
          const std::size_t K = wd.zs.size();
          /* image columns of every f slot */
          std::vector<Vec> imgs;
          for (std::size_t i = 0; i <= K; ++i)
            imgs.push_back(f.hom_matrix(f_src(wd, s, i), f_tgt(wd, t, i), wd.degs[i])
                               .column(wd.idx[i]));
          QWord w2;
          w2.zs.resize(K);
          for (std::size_t j = 0; j < K; ++j) w2.zs[j] = f.object_image(wd.zs[j]);
          w2.degs = wd.degs;
          w2.idx.assign(K + 1, 0);
          /* multilinear expansion over the supports */
          std::vector<std::size_t> pick(K + 1, 0);
          const auto advance = [&]() {
            for (std::size_t i = 0; i <= K; ++i) {
              if (++pick[i] < imgs[i].size()) return true;
              pick[i] = 0;
            }
            return false;
          };
          bool any = true;
          for (std::size_t i = 0; i <= K; ++i) any = any && !imgs[i].empty();
          if (!any) continue;
          do {
            Scalar coef = Scalar::one(k);
            for (std::size_t i = 0; i <= K; ++i) coef = coef * imgs[i][pick[i]];
            if (coef == Scalar::zero(k)) continue;
            for (std::size_t i = 0; i <= K; ++i) w2.idx[i] = pick[i];
            const std::size_t r = ixr.at(word_key(w2));
            m.at(r, col) = m.at(r, col) + coef;
          } while (advance());
        }
        G.set_hom_matrix(s, t, n, m);
      }
  return G;
}

}  // namespace dgcalc
