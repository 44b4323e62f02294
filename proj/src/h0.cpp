#include "dgcalc/h0.hpp"

namespace dgcalc {

namespace {

void require_degrees(const DGCategoryTab& t, int lo, int hi, const char* what) {
  const Window w = t.window();
  if (!w.contains(lo) || !w.contains(hi))
    throw WindowError(std::string(what) + ": needs degrees " + std::to_string(lo) + ".." +
                      std::to_string(hi) + " inside " + w.str());
}

} // namespace

std::string trilean_str(Trilean t) {
  switch (t) {
    case Trilean::Yes: return "yes";
    case Trilean::No: return "no";
    default: return "inconclusive";
  }
}

std::size_t H0Category::dim(std::size_t s, std::size_t t) const {
  auto it = reps.find({s, t});
  return it == reps.end() ? 0 : it->second.size();
}

H0Category h0(const DGCategoryTab& t) {
  require_degrees(t, -1, 1, "h0");
  H0Category out;
  out.f = t.field();
  out.objects = t.objects();
  for (std::size_t s = 0; s < t.num_objects(); ++s)
    for (std::size_t u = 0; u < t.num_objects(); ++u) {
      auto coh = t.hom_complex(s, u).cohomology(0);
      if (coh.dim != 0) out.reps.emplace(std::make_pair(s, u), std::move(coh.representatives));
    }
  return out;
}

std::optional<Morphism> contraction(const DGCategoryTab& t, std::size_t x) {
  require_degrees(t, -1, 0, "contraction");
  auto sol = solve_linear(t.diff_matrix(x, x, -1), t.identity(x).coords);
  if (!sol) return std::nullopt;
  return Morphism{x, x, -1, std::move(*sol)};
}

bool is_contractible(const DGCategoryTab& t, std::size_t x) {
  return contraction(t, x).has_value();
}

bool is_invertible_h0(const DGCategoryTab& t, const Morphism& f) {
  t.check_morphism(f, "is_invertible_h0");
  if (f.degree != 0) throw PreconditionError("is_invertible_h0: the morphism must have degree 0");
  require_degrees(t, -1, 1, "is_invertible_h0");
  if (!morphism_is_zero(t.differential(f)))
    throw PreconditionError("is_invertible_h0: the morphism is not a cocycle");

  const Field k = t.field();
  const std::size_t x = f.src, y = f.tgt;
  const std::size_t ng = t.dim(y, x, 0);  // candidate inverse
  const std::size_t na = t.dim(y, y, -1); // exactness slack on the target side
  const std::size_t nb = t.dim(x, x, -1); // exactness slack on the source side

  const Matrix dg = t.diff_matrix(y, x, 0);
  const Matrix lf = t.left_compose_matrix(f, y, 0);   // g |-> f.g
  const Matrix rf = t.right_compose_matrix(f, x, 0);  // g |-> g.f
  const Matrix da = t.diff_matrix(y, y, -1);
  const Matrix db = t.diff_matrix(x, x, -1);

  const std::size_t r1 = dg.rows(), r2 = lf.rows(), r3 = rf.rows();
  Matrix a(k, r1 + r2 + r3, ng + na + nb);
  for (std::size_t i = 0; i < r1; ++i)
    for (std::size_t j = 0; j < ng; ++j) a.at(i, j) = dg.at(i, j);
  for (std::size_t i = 0; i < r2; ++i) {
    for (std::size_t j = 0; j < ng; ++j) a.at(r1 + i, j) = lf.at(i, j);
    for (std::size_t j = 0; j < na; ++j) a.at(r1 + i, ng + j) = -da.at(i, j);
  }
  for (std::size_t i = 0; i < r3; ++i) {
    for (std::size_t j = 0; j < ng; ++j) a.at(r1 + r2 + i, j) = rf.at(i, j);
    for (std::size_t j = 0; j < nb; ++j) a.at(r1 + r2 + i, ng + na + j) = -db.at(i, j);
  }

  Vec rhs = vec_zero(k, r1 + r2 + r3);
  const Vec idy = t.identity(y).coords, idx = t.identity(x).coords;
  for (std::size_t i = 0; i < r2; ++i) rhs[r1 + i] = idy[i];
  for (std::size_t i = 0; i < r3; ++i) rhs[r1 + r2 + i] = idx[i];

  return solve_linear(a, rhs).has_value();
}

EquivalenceVerdict is_homotopy_equivalent(const DGCategoryTab& t, std::size_t x, std::size_t y) {
  require_degrees(t, -1, 1, "is_homotopy_equivalent");
  if (x == y) return {Trilean::Yes, "same object", t.identity(x)};

  const bool cx = is_contractible(t, x), cy = is_contractible(t, y);
  if (cx && cy) return {Trilean::Yes, "both objects contractible", t.zero_morphism(x, y, 0)};

  for (const Morphism& m : t.registered_equivs()) {
    if (m.degree != 0) continue;
    if (!((m.src == x && m.tgt == y) || (m.src == y && m.tgt == x))) continue;
    if (!morphism_is_zero(t.differential(m))) continue;
    if (is_invertible_h0(t, m)) return {Trilean::Yes, "registered candidate", m};
  }

  const auto reps_xy = t.hom_complex(x, y).cohomology(0).representatives;
  const auto reps_yx = t.hom_complex(y, x).cohomology(0).representatives;
  if (reps_xy.empty() || reps_yx.empty())
    return {Trilean::No,
            "no degree-0 classes from " + t.object_label(reps_xy.empty() ? x : y) + " to " +
                t.object_label(reps_xy.empty() ? y : x) +
                " while the objects are not both contractible",
            std::nullopt};

  std::vector<Vec> candidates = reps_xy;
  for (std::size_t i = 0; i < reps_xy.size(); ++i)
    for (std::size_t j = i + 1; j < reps_xy.size(); ++j) {
      candidates.push_back(vec_add(reps_xy[i], reps_xy[j]));
      candidates.push_back(vec_sub(reps_xy[i], reps_xy[j]));
    }
  bool swept_all = true;
  if (candidates.size() > 200) {
    candidates.resize(200);
    swept_all = false;
  }
  for (const Vec& c : candidates) {
    Morphism m{x, y, 0, c};
    if (is_invertible_h0(t, m)) return {Trilean::Yes, "witness found by the sweep", m};
  }
  return {Trilean::Inconclusive,
          swept_all ? "classes exist both ways but no swept witness is invertible"
                    : "sweep truncated at 200 candidates without a witness",
          std::nullopt};
}

} // namespace dgcalc
