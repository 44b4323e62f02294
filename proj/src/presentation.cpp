#include "dgcalc/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <tuple>
#include <utility>

namespace dgcalc {

namespace {
bool ident_ok(const std::string& s) {
  if (s.empty()) return false;
  unsigned char c0 = static_cast<unsigned char>(s[0]);
  if (!std::isalpha(c0) && s[0] != '_') return false;
  for (char ch : s) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (!std::isalnum(c) && ch != '_' && ch != '\'') return false;
  }
  return true;
}
} // namespace

std::string PWord::label() const {
  if (gens.empty()) return "id(" + obj + ")";
  std::string out = gens[0];
  for (std::size_t i = 1; i < gens.size(); ++i) out += "." + gens[i];
  return out;
}

bool PWord::operator<(const PWord& o) const {
  if (gens.size() != o.gens.size()) return gens.size() < o.gens.size();
  if (gens != o.gens) return gens < o.gens;
  return obj < o.obj;
}

PWord pw_id(std::string obj) { return PWord{std::move(obj), {}}; }

PWord pw(std::vector<std::string> gens) {
  if (gens.empty()) throw PreconditionError("pw: an empty word needs an object; use pw_id");
  return PWord{"", std::move(gens)};
}

void pc_add(PComb& c, const Scalar& coeff, const PWord& w) {
  if (coeff.is_zero()) return;
  auto it = c.find(w);
  if (it == c.end()) {
    c.emplace(w, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) c.erase(it);
}

PComb pc_term(const Scalar& coeff, const PWord& w) {
  PComb c;
  pc_add(c, coeff, w);
  return c;
}

std::string pcomb_str(const PComb& c) {
  if (c.empty()) return "0";
  std::string out;
  for (const auto& [w, s] : c) {
    if (!out.empty()) out += " + ";
    out += s.str() + " " + w.label();
  }
  return out;
}

const PComb DGPresentation::kZero{};

void DGPresentation::add_object(const std::string& label) {
  if (!ident_ok(label)) throw StructuralError("object label '" + label + "' is not an identifier");
  if (object_index_.count(label)) throw StructuralError("duplicate object '" + label + "'");
  object_index_.emplace(label, objects_.size());
  objects_.push_back(label);
}

bool DGPresentation::has_object(const std::string& label) const {
  return object_index_.count(label) != 0;
}

void DGPresentation::add_generator(const std::string& name, const std::string& src,
                                   const std::string& tgt, int degree) {
  if (!ident_ok(name)) throw StructuralError("generator name '" + name + "' is not an identifier");
  if (gen_index_.count(name)) throw StructuralError("duplicate generator '" + name + "'");
  if (!has_object(src)) throw StructuralError("generator " + name + ": unknown source '" + src + "'");
  if (!has_object(tgt)) throw StructuralError("generator " + name + ": unknown target '" + tgt + "'");
  gen_index_.emplace(name, gens_.size());
  gens_.push_back(PGen{name, src, tgt, degree});
}

bool DGPresentation::has_generator(const std::string& name) const {
  return gen_index_.count(name) != 0;
}

const PGen& DGPresentation::generator(const std::string& name) const {
  auto it = gen_index_.find(name);
  if (it == gen_index_.end()) throw StructuralError("unknown generator '" + name + "'");
  return gens_[it->second];
}

void DGPresentation::set_gen_diff(const std::string& name, PComb value) {
  generator(name); // existence check
  gdiff_[name] = std::move(value);
}

const PComb& DGPresentation::gen_diff(const std::string& name) const {
  auto it = gdiff_.find(name);
  return it == gdiff_.end() ? kZero : it->second;
}

void DGPresentation::add_relation(PComb r) {
  if (r.empty()) throw StructuralError("empty relation");
  rels_.push_back(std::move(r));
}

DGPresentation::Signature DGPresentation::signature(const PWord& w) const {
  if (w.is_identity()) {
    if (!has_object(w.obj)) throw StructuralError("identity word at unknown object '" + w.obj + "'");
    return {w.obj, w.obj, 0};
  }
  int deg = 0;
  for (std::size_t i = 0; i < w.gens.size(); ++i) {
    const PGen& g = generator(w.gens[i]);
    deg += g.degree;
    if (i + 1 < w.gens.size() && generator(w.gens[i + 1]).tgt != g.src)
      throw StructuralError("word " + w.label() + " does not compose at position " +
                            std::to_string(i));
  }
  return {generator(w.gens.back()).src, generator(w.gens.front()).tgt, deg};
}

std::optional<DGPresentation::Signature> DGPresentation::signature(const PComb& c) const {
  std::optional<Signature> sig;
  for (const auto& [w, s] : c) {
    (void)s;
    Signature ws = signature(w);
    if (!sig)
      sig = ws;
    else if (!(*sig == ws))
      throw StructuralError("inhomogeneous combination: " + pcomb_str(c));
  }
  return sig;
}

void DGPresentation::validate() const {
  for (const auto& [name, comb] : gdiff_) {
    const PGen& g = generator(name);
    for (const auto& [w, s] : comb) {
      if (!(s.field() == f_))
        throw StructuralError("differential of " + name + ": scalar over the wrong field");
      if (s.is_zero()) throw StructuralError("differential of " + name + ": zero term stored");
      Signature ws = signature(w);
      if (ws.src != g.src || ws.tgt != g.tgt || ws.degree != g.degree + 1)
        throw StructuralError("differential of " + name + ": term " + w.label() +
                              " has the wrong signature");
    }
  }
  for (const PComb& r : rels_) {
    if (r.empty()) throw StructuralError("empty relation");
    for (const auto& [w, s] : r) {
      (void)w;
      if (!(s.field() == f_)) throw StructuralError("relation over the wrong field: " + pcomb_str(r));
      if (s.is_zero()) throw StructuralError("relation with a zero term stored: " + pcomb_str(r));
    }
    signature(r); // homogeneity
  }
}

namespace {

using SigKey = std::tuple<std::size_t, std::size_t, int>;

struct SigData {
  std::vector<PWord> words; // sorted (length, then name-lexicographic)
  std::map<PWord, std::size_t> index;
  std::vector<Vec> sub; // relation consequences, as ambient vectors
  std::optional<SubquotientBasis> sqb;
  std::vector<std::size_t> chosen; // word indices of the normal forms
};

/* One tabulation run: enumerate words, impose relation consequences, pick
 * normal forms, then rewrite differentials and products down to them. */
struct Tabulator {
  const DGPresentation& p;
  Window w;
  int cap;
  Field f;
  std::map<std::string, std::size_t> oi; // object label -> index
  std::map<SigKey, SigData> sigs;        // every signature with a word, windowed or not

  SigKey word_key(const PWord& wd) const {
    auto s = p.signature(wd);
    return {oi.at(s.src), oi.at(s.tgt), s.degree};
  }

  std::size_t class_dim(const SigKey& k) const {
    auto it = sigs.find(k);
    return it == sigs.end() ? 0 : it->second.chosen.size();
  }

  void enumerate() {
    struct WSig {
      PWord w;
      std::size_t s, t;
      int n;
    };
    std::vector<std::vector<WSig>> layers(static_cast<std::size_t>(cap) + 1);
    for (const std::string& l : p.objects()) layers[0].push_back({pw_id(l), oi.at(l), oi.at(l), 0});
    std::size_t total = layers[0].size();
    for (int len = 1; len <= cap; ++len) {
      for (const WSig& prev : layers[static_cast<std::size_t>(len) - 1]) {
        for (const PGen& g : p.generators()) {
          if (oi.at(g.tgt) != prev.s) continue; // must feed into the word so far
          WSig nw{prev.w, oi.at(g.src), prev.t, prev.n + g.degree};
          nw.w.obj.clear();
          nw.w.gens.push_back(g.name);
          if (++total > 200000)
            throw CapError("tabulate: more than 200000 words at cap " + std::to_string(cap));
          layers[static_cast<std::size_t>(len)].push_back(std::move(nw));
        }
      }
    }
    for (auto& layer : layers)
      for (auto& ws : layer) sigs[{ws.s, ws.t, ws.n}].words.push_back(std::move(ws.w));
    for (auto& [k, sd] : sigs) {
      (void)k;
      std::sort(sd.words.begin(), sd.words.end());
      for (std::size_t i = 0; i < sd.words.size(); ++i) sd.index.emplace(sd.words[i], i);
    }
  }

  static PWord concat3(const PWord& u, const PWord& m, const PWord& v) {
    PWord out;
    out.gens.reserve(u.gens.size() + m.gens.size() + v.gens.size());
    out.gens.insert(out.gens.end(), u.gens.begin(), u.gens.end());
    out.gens.insert(out.gens.end(), m.gens.begin(), m.gens.end());
    out.gens.insert(out.gens.end(), v.gens.begin(), v.gens.end());
    if (out.gens.empty()) out.obj = v.obj; // three identities at one object
    return out;
  }

  void consequences() {
    for (const PComb& r : p.relations()) {
      auto sig = p.signature(r);
      std::size_t a = oi.at(sig->src), b = oi.at(sig->tgt);
      std::size_t maxlen = 0;
      for (const auto& [wd, c] : r) {
        (void)c;
        maxlen = std::max(maxlen, wd.gens.size());
      }
      if (maxlen > static_cast<std::size_t>(cap)) continue; // unusable; certificate notices
      const std::size_t room = static_cast<std::size_t>(cap) - maxlen;
      for (const auto& [vk, vd] : sigs) {
        if (std::get<1>(vk) != a) continue; // v must land at the relation's source
        for (const PWord& v : vd.words) {
          if (v.gens.size() > room) break; // sorted by length
          for (const auto& [uk, ud] : sigs) {
            if (std::get<0>(uk) != b) continue; // u must start at the relation's target
            for (const PWord& u : ud.words) {
              if (u.gens.size() + v.gens.size() > room) break;
              SigKey key{std::get<0>(vk), std::get<1>(uk),
                         std::get<2>(vk) + sig->degree + std::get<2>(uk)};
              SigData& sd = sigs.at(key);
              Vec vec = vec_zero(f, sd.words.size());
              for (const auto& [wd, c] : r) vec[sd.index.at(concat3(u, wd, v))] += c;
              if (!vec_is_zero(vec)) sd.sub.push_back(std::move(vec));
            }
          }
        }
      }
    }
  }

  void bases() {
    for (auto& [k, sd] : sigs) {
      (void)k;
      const std::size_t n = sd.words.size();
      std::vector<Vec> units(n);
      for (std::size_t i = 0; i < n; ++i) {
        units[i] = vec_zero(f, n);
        units[i][i] = Scalar::one(f);
      }
      sd.sqb.emplace(f, n, sd.sub, units);
      sd.chosen = sd.sqb->chosen();
    }
  }

  /* Class coordinates of a word over the normal forms of its signature.
   * Words under the cap are read off directly; longer ones peel a cap-sized
   * prefix, rewrite it to strictly shorter forms, and recurse. Throws
   * CapError when some needed normal form is as long as the cap. */
  Vec reduce(const PWord& wd) const {
    SigKey key = word_key(wd);
    auto it = sigs.find(key);
    if (wd.gens.size() <= static_cast<std::size_t>(cap)) {
      if (it == sigs.end())
        throw StructuralError("tabulate: internal: word " + wd.label() +
                              " missing from the enumeration");
      const SigData& sd = it->second;
      Vec unit = vec_zero(f, sd.words.size());
      unit[sd.index.at(wd)] = Scalar::one(f);
      return sd.sqb->coords(unit);
    }
    PWord prefix, rest;
    prefix.gens.assign(wd.gens.begin(), wd.gens.begin() + cap);
    rest.gens.assign(wd.gens.begin() + cap, wd.gens.end());
    const SigData& pd = sigs.at(word_key(prefix));
    Vec unit = vec_zero(f, pd.words.size());
    unit[pd.index.at(prefix)] = Scalar::one(f);
    Vec pc = pd.sqb->coords(unit);
    Vec acc = vec_zero(f, it == sigs.end() ? 0 : it->second.chosen.size());
    for (std::size_t i = 0; i < pc.size(); ++i) {
      if (pc[i].is_zero()) continue;
      const PWord& nf = pd.words[pd.chosen[i]];
      if (nf.gens.size() >= static_cast<std::size_t>(cap))
        throw CapError("tabulate: rewriting " + wd.label() + " is stuck at cap " +
                       std::to_string(cap));
      PWord next;
      next.gens.reserve(nf.gens.size() + rest.gens.size());
      next.gens.insert(next.gens.end(), nf.gens.begin(), nf.gens.end());
      next.gens.insert(next.gens.end(), rest.gens.begin(), rest.gens.end());
      acc = vec_add(acc, vec_scale(pc[i], reduce(next)));
    }
    return acc;
  }

  /* d of a word by the graded product rule, as class coordinates one degree
   * up: sum over letters, sign (-1)^(total degree of the letters applied
   * later), the letter's differential spliced in place. */
  Vec d_word_class(const PWord& wd) const {
    SigKey key = word_key(wd);
    SigKey dkey{std::get<0>(key), std::get<1>(key), std::get<2>(key) + 1};
    Vec acc = vec_zero(f, class_dim(dkey));
    bool neg = false;
    for (std::size_t i = 0; i < wd.gens.size(); ++i) {
      const PGen& g = p.generator(wd.gens[i]);
      for (const auto& [term, coeff] : p.gen_diff(g.name)) {
        PWord spliced;
        spliced.gens.reserve(wd.gens.size() - 1 + term.gens.size());
        spliced.gens.insert(spliced.gens.end(), wd.gens.begin(), wd.gens.begin() + i);
        spliced.gens.insert(spliced.gens.end(), term.gens.begin(), term.gens.end());
        spliced.gens.insert(spliced.gens.end(), wd.gens.begin() + i + 1, wd.gens.end());
        if (spliced.gens.empty()) spliced.obj = g.src;
        acc = vec_add(acc, vec_scale(neg ? -coeff : coeff, reduce(spliced)));
      }
      if (g.degree % 2 != 0) neg = !neg;
    }
    return acc;
  }

  bool all_nonpos() const {
    for (const PGen& g : p.generators())
      if (g.degree > 0) return false;
    return true;
  }

  bool rel_ok() const {
    for (const PComb& r : p.relations())
      for (const auto& [wd, c] : r) {
        (void)c;
        if (wd.gens.size() > static_cast<std::size_t>(cap)) return false;
      }
    return true;
  }

  bool forms_ok() const {
    for (const auto& [k, sd] : sigs) {
      (void)k;
      for (std::size_t idx : sd.chosen)
        if (sd.words[idx].gens.size() >= static_cast<std::size_t>(cap)) return false;
    }
    return true;
  }

  /* The span of the imposed consequences must be carried into itself by d,
   * or the differential does not descend to the presented quotient. Exact
   * in the complete regime, where it runs. */
  void check_diff_closure() const {
    for (const auto& [k, sd] : sigs) {
      SigKey dkey{std::get<0>(k), std::get<1>(k), std::get<2>(k) + 1};
      for (const Vec& c : sd.sub) {
        Vec acc = vec_zero(f, class_dim(dkey));
        for (std::size_t i = 0; i < c.size(); ++i)
          if (!c[i].is_zero()) acc = vec_add(acc, vec_scale(c[i], d_word_class(sd.words[i])));
        if (!vec_is_zero(acc))
          throw StructuralError("tabulate: relations are not closed under the differential in Hom(" +
                                p.objects()[std::get<0>(k)] + ", " + p.objects()[std::get<1>(k)] +
                                ") at degree " + std::to_string(std::get<2>(k)));
      }
    }
  }

  DGCategoryTab assemble() {
    enumerate();
    consequences();
    bases();
    const bool complete = all_nonpos() && rel_ok() && forms_ok();
    if (complete) check_diff_closure();

    DGCategoryTab out(f, w);
    for (const std::string& l : p.objects()) out.add_object(l);

    for (const auto& [k, sd] : sigs) {
      auto [s, t, n] = k;
      if (!w.contains(n) || sd.chosen.empty()) continue;
      std::vector<std::string> labels;
      labels.reserve(sd.chosen.size());
      for (std::size_t idx : sd.chosen) labels.push_back(sd.words[idx].label());
      out.set_hom_basis(s, t, n, std::move(labels));
    }

    for (const std::string& l : p.objects()) out.set_identity(oi.at(l), reduce(pw_id(l)));

    for (const auto& [k, sd] : sigs) {
      auto [s, t, n] = k;
      if (!w.contains(n) || n + 1 > w.hi || sd.chosen.empty()) continue;
      const std::size_t rows = class_dim({s, t, n + 1});
      Matrix d(f, rows, sd.chosen.size());
      bool nonzero = false;
      for (std::size_t j = 0; j < sd.chosen.size(); ++j) {
        Vec col = d_word_class(sd.words[sd.chosen[j]]);
        for (std::size_t i = 0; i < rows; ++i) {
          if (!col[i].is_zero()) nonzero = true;
          d.at(i, j) = col[i];
        }
      }
      if (nonzero) out.set_diff(s, t, n, std::move(d));
    }

    const std::size_t nobj = p.objects().size();
    for (std::size_t s = 0; s < nobj; ++s)
      for (std::size_t m = 0; m < nobj; ++m)
        for (std::size_t t = 0; t < nobj; ++t)
          for (int dp = w.lo; dp <= w.hi; ++dp)
            for (int dq = w.lo; dq <= w.hi; ++dq) {
              if (!w.contains(dp + dq)) continue;
              const std::size_t np = out.dim(m, t, dp), nq = out.dim(s, m, dq);
              if (np == 0 || nq == 0) continue;
              const SigData& pd = sigs.at({m, t, dp});
              const SigData& qd = sigs.at({s, m, dq});
              for (std::size_t i = 0; i < np; ++i)
                for (std::size_t j = 0; j < nq; ++j) {
                  const PWord& wi = pd.words[pd.chosen[i]];
                  const PWord& wj = qd.words[qd.chosen[j]];
                  PWord cat;
                  cat.gens.reserve(wi.gens.size() + wj.gens.size());
                  cat.gens.insert(cat.gens.end(), wi.gens.begin(), wi.gens.end());
                  cat.gens.insert(cat.gens.end(), wj.gens.begin(), wj.gens.end());
                  if (cat.gens.empty()) cat.obj = wi.obj;
                  std::optional<Vec> val;
                  try {
                    val = reduce(cat);
                  } catch (const CapError&) {
                    if (complete)
                      throw StructuralError(
                          "tabulate: internal: rewriting stuck in a complete tabulation");
                    val = std::nullopt;
                  }
                  out.set_composition_entry(s, m, t, dp, dq, i, j, std::move(val));
                }
            }

    auto link = std::make_shared<PresentationLink>(PresentationLink{p, cap, {}, {}});
    for (const auto& [k, sd] : sigs) {
      auto [s, t, n] = k;
      if (!w.contains(n) || sd.chosen.empty()) continue;
      std::vector<PWord>& bw = link->basis_words[{s, t, n}];
      bw.reserve(sd.chosen.size());
      for (std::size_t idx : sd.chosen) bw.push_back(sd.words[idx]);
    }
    for (const PGen& g : p.generators()) {
      PWord wg;
      wg.gens.push_back(g.name);
      link->gen_values.emplace(g.name,
                               Morphism{oi.at(g.src), oi.at(g.tgt), g.degree, reduce(wg)});
    }
    out.set_presentation(std::move(link));

    out.set_status(complete ? Tabulation::Complete : Tabulation::Truncated);
    out.set_sup_bound(all_nonpos() ? 0 : w.hi);
    return out;
  }
};

} // namespace

DGCategoryTab tabulate(const DGPresentation& p, Window w, int cap) {
  p.validate();
  if (!w.contains(0)) throw WindowError("tabulate: window " + w.str() + " must contain degree 0");
  if (cap < 1) throw PreconditionError("tabulate: cap must be at least 1");
  for (const PGen& g : p.generators()) {
    if (!w.contains(g.degree))
      throw WindowError("tabulate: generator " + g.name + " has degree " +
                        std::to_string(g.degree) + " outside " + w.str());
    if (!p.gen_diff(g.name).empty() && !w.contains(g.degree + 1))
      throw WindowError("tabulate: the differential of " + g.name + " leaves the window " +
                        w.str());
  }
  Tabulator tb{p, w, cap, p.field(), {}, {}};
  for (const std::string& l : p.objects()) tb.oi.emplace(l, tb.oi.size());
  return tb.assemble();
}

Morphism eval_word(const DGCategoryTab& t, const std::map<std::string, std::size_t>& objs,
                   const std::map<std::string, Morphism>& vals, const PWord& w) {
  if (w.is_identity()) {
    auto it = objs.find(w.obj);
    if (it == objs.end()) throw StructuralError("eval: unknown object '" + w.obj + "'");
    return t.identity(it->second);
  }
  auto val = [&](const std::string& name) -> const Morphism& {
    auto it = vals.find(name);
    if (it == vals.end()) throw StructuralError("eval: no value for generator '" + name + "'");
    return it->second;
  };
  Morphism acc = val(w.gens.back());
  for (std::size_t i = w.gens.size() - 1; i-- > 0;) acc = t.compose(val(w.gens[i]), acc);
  return acc;
}

Morphism eval_comb(const DGCategoryTab& t, const std::map<std::string, std::size_t>& objs,
                   const std::map<std::string, Morphism>& vals, const PComb& c) {
  if (c.empty()) throw PreconditionError("eval: an empty combination has no signature");
  std::optional<Morphism> acc;
  for (const auto& [w, s] : c) {
    Morphism m = morphism_scale(s, eval_word(t, objs, vals, w));
    acc = acc ? morphism_add(*acc, m) : std::optional<Morphism>(std::move(m));
  }
  return *acc;
}

} // namespace dgcalc
