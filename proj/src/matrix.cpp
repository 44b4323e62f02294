#include "dgcalc/matrix.hpp"

#include <sstream>

namespace dgcalc {

Vec vec_zero(Field f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw StructuralError("vector length mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw StructuralError("vector length mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& a) {
  Vec r = a;
  for (auto& x : r) x *= c;
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

bool vec_eq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::string vec_str(const Vec& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i].str();
  os << ")";
  return os.str();
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw StructuralError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Scalar& Matrix::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) throw StructuralError("matrix index out of range");
  return a_[i * cols_ + j];
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw StructuralError("matrix index out of range");
  return a_[i * cols_ + j];
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (!(f_ == o.f_)) throw StructuralError("mixed-field matrix product");
  if (cols_ != o.rows_) throw StructuralError("matrix shape mismatch in product");
  Matrix r(f_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (!(f_ == o.f_) || rows_ != o.rows_ || cols_ != o.cols_)
    throw StructuralError("matrix shape/field mismatch in sum");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(-Scalar::one(f_)); }

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw StructuralError("matrix/vector shape mismatch");
  Vec r = vec_zero(f_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& aij = at(i, j);
      if (!aij.is_zero()) r[i] += aij * v[j];
    }
  return r;
}

Matrix Matrix::transposed() const {
  Matrix r(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  if (!(f_ == o.f_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

Vec Matrix::column(std::size_t j) const {
  Vec v = vec_zero(f_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Vec Matrix::row(std::size_t i) const {
  Vec v = vec_zero(f_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

/* Clear row i of m to coprime integers (Q only): multiply by the lcm of
 * denominators, divide by the gcd of numerators. Row scaling by a nonzero
 * constant preserves row space, rank, null space and solution sets. */
static void normalize_row_q(Matrix& m, std::size_t i) {
  mpz_class den_lcm = 1, num_gcd = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const mpq_class& q = m.at(i, j).rational();
    if (q == 0) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
  }
  if (num_gcd == 0) return; // zero row
  mpq_class factor(den_lcm, num_gcd);
  factor.canonicalize();
  Scalar c = Scalar::parse(m.field(), factor.get_str());
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) *= c;
}

Rref rref(const Matrix& a) {
  Matrix m = a;
  const Field f = m.field();
  const bool rat = f.is_rational();
  std::vector<std::size_t> pivots;

  if (rat)
    for (std::size_t i = 0; i < m.rows(); ++i) normalize_row_q(m, i);

  /* Forward pass: row echelon. Over Q, Bareiss one-step fraction-free update
   * (rows stay integral, the division by the previous pivot is exact). */
  Scalar prev_pivot = Scalar::one(f);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(sel, j));
    const Scalar piv = m.at(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Scalar mic = m.at(i, c);
      if (rat) {
        for (std::size_t j = 0; j < m.cols(); ++j)
          m.at(i, j) = (piv * m.at(i, j) - mic * m.at(r, j)) / prev_pivot;
      } else if (!mic.is_zero()) {
        const Scalar factor = mic / piv;
        for (std::size_t j = 0; j < m.cols(); ++j)
          m.at(i, j) -= factor * m.at(r, j);
      }
    }
    prev_pivot = piv;
    pivots.push_back(c);
    ++r;
  }

  /* Backward pass: scale pivots to 1, eliminate above. */
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t pr = k, pc = pivots[k];
    const Scalar inv = m.at(pr, pc).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(pr, j) *= inv;
    for (std::size_t i = 0; i < pr; ++i) {
      const Scalar c = m.at(i, pc);
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= c * m.at(pr, j);
    }
  }
  return Rref{std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

std::optional<Vec> solve_linear(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw StructuralError("solve_linear: rhs length mismatch");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  Rref r = rref(aug);
  for (std::size_t p : r.pivots)
    if (p == a.cols()) return std::nullopt; // a pivot in the rhs column: inconsistent
  Vec x = vec_zero(a.field(), a.cols());
  for (std::size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = r.m.at(k, a.cols());
  return x;
}

std::vector<Vec> nullspace(const Matrix& a) {
  Rref r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free_c = 0; free_c < a.cols(); ++free_c) {
    if (is_pivot[free_c]) continue;
    Vec v = vec_zero(a.field(), a.cols());
    v[free_c] = Scalar::one(a.field());
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
      v[r.pivots[k]] = -r.m.at(k, free_c);
    basis.push_back(std::move(v));
  }
  return basis;
}

SubquotientBasis::SubquotientBasis(Field f, std::size_t ambient_dim, const std::vector<Vec>& sub,
                                   const std::vector<Vec>& gens)
    : f_(f), ambient_(ambient_dim), nsub_(sub.size()), solve_m_(f, 0, 0) {
  all_.reserve(sub.size() + gens.size());
  for (const auto& v : sub) all_.push_back(v);
  for (const auto& v : gens) all_.push_back(v);
  Matrix m = Matrix::from_columns(f, ambient_dim, all_);
  Rref r = rref(m);
  for (std::size_t p : r.pivots)
    if (p >= nsub_) chosen_.push_back(p - nsub_);
  solve_m_ = std::move(m);
}

Vec SubquotientBasis::coords(const Vec& v) const {
  if (v.size() != ambient_) throw StructuralError("subquotient: vector dimension mismatch");
  auto x = solve_linear(solve_m_, v);
  if (!x) throw PreconditionError("vector lies outside the spanned subquotient");
  Vec out = vec_zero(f_, chosen_.size());
  for (std::size_t k = 0; k < chosen_.size(); ++k) out[k] = (*x)[nsub_ + chosen_[k]];
  return out;
}

} // namespace dgcalc
