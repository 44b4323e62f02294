#pragma once
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dgcalc/field.hpp"

namespace dgcalc {

using Vec = std::vector<Scalar>;

Vec vec_zero(Field f, std::size_t n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& a);
bool vec_is_zero(const Vec& a);
bool vec_eq(const Vec& a, const Vec& b);
std::string vec_str(const Vec& a);

/* Dense exact matrix. Deterministic throughout: callers order their bases by
 * (degree, basis-label lexicographic) and every elimination below scans
 * columns left to right, rows top to bottom. */
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);
  /* Columns are the given vectors (all of length rows). */
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols);

  Field field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j);
  const Scalar& at(std::size_t i, std::size_t j) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Vec apply(const Vec& v) const;
  Matrix transposed() const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;

  Vec column(std::size_t j) const;
  Vec row(std::size_t i) const;

 private:
  Field f_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

/* Reduced row echelon form plus the pivot columns. Over Q the forward pass is
 * fraction-free (rows cleared to integers, Bareiss update) so intermediate
 * entries never blow up; over F_p it is plain elimination. The final RREF is
 * the canonical one either way. */
struct Rref {
  Matrix m;
  std::vector<std::size_t> pivots;
};
Rref rref(const Matrix& a);

std::size_t rank(const Matrix& a);

/* First solution of A x = b under the fixed pivot order: free variables are
 * set to zero. nullopt when inconsistent. */
std::optional<Vec> solve_linear(const Matrix& a, const Vec& b);

/* Deterministic basis of {x : A x = 0}, one vector per free column in
 * ascending column order. */
std::vector<Vec> nullspace(const Matrix& a);

/* Working basis of a subquotient span(gens) / span(sub) of k^n: picks the
 * earliest generators (in the given order) that are independent modulo the
 * sub-span, and expresses any vector of span(sub)+span(gens) in canonical
 * coordinates over the chosen ones. */
class SubquotientBasis {
 public:
  SubquotientBasis(Field f, std::size_t ambient_dim, const std::vector<Vec>& sub,
                   const std::vector<Vec>& gens);

  const std::vector<std::size_t>& chosen() const { return chosen_; }
  std::size_t dim() const { return chosen_.size(); }
  /* Coordinates of [v] over the chosen generators; throws PreconditionError
   * when v lies outside span(sub)+span(gens). */
  Vec coords(const Vec& v) const;

 private:
  Field f_;
  std::size_t ambient_, nsub_;
  std::vector<Vec> all_;             // sub then gens, as columns
  std::vector<std::size_t> chosen_;  // indices into gens
  Matrix solve_m_;                   // [sub | gens] assembled once
};

} // namespace dgcalc
