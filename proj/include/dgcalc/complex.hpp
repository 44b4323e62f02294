#pragma once
#include <map>
#include <string>
#include <vector>

#include "dgcalc/matrix.hpp"

namespace dgcalc {

/* Closed degree interval [lo, hi]. Everything graded in this library lives on
 * one; touching a degree outside it is a loud WindowError, never a silent 0. */
struct Window {
  int lo = 0, hi = 0;

  bool contains(int n) const { return lo <= n && n <= hi; }
  void require(int n, const std::string& what) const;
  static Window intersect(Window a, Window b);
  bool operator==(const Window&) const = default;
  std::string str() const;
};

/* Finite-dimensional graded vector space with labeled bases, one list of
 * labels per degree of the window (absent degree = dimension 0). */
class GradedSpace {
 public:
  GradedSpace(Field f, Window w) : f_(f), w_(w) {}

  Field field() const { return f_; }
  Window window() const { return w_; }
  void set_basis(int n, std::vector<std::string> labels);
  std::size_t dim(int n) const;
  const std::vector<std::string>& labels(int n) const;
  std::size_t total_dim() const;

 private:
  Field f_;
  Window w_;
  std::map<int, std::vector<std::string>> labels_;
  static const std::vector<std::string> kEmpty;
};

/* Cochain complex: differential raises degree by 1. d(n) maps degree n to
 * n+1 and is stored for every n with both endpoints in the window. */
class CochainComplex {
 public:
  explicit CochainComplex(GradedSpace gr);

  Field field() const { return gr_.field(); }
  Window window() const { return gr_.window(); }
  const GradedSpace& graded() const { return gr_; }
  std::size_t dim(int n) const { return gr_.dim(n); }

  void set_diff(int n, Matrix d);
  const Matrix& diff(int n) const;

  /* Violations of d(n+1) . d(n) = 0, one message per offending pair. */
  std::vector<std::string> check_d_squared() const;

  struct Cohomology {
    std::size_t dim = 0;
    std::vector<Vec> representatives; // cocycles, one per class
  };
  /* Requires n-1, n, n+1 inside the window and d.d = 0 at n. */
  Cohomology cohomology(int n) const;

  /* Canonical class machinery at degree n: basis classes plus coordinates of
   * arbitrary cocycles. Same preconditions as cohomology(). */
  SubquotientBasis class_basis(int n) const;

  /* Alternating sum of dimensions over the window. */
  long long euler_characteristic() const;

 private:
  GradedSpace gr_;
  std::map<int, Matrix> d_;
};

} // namespace dgcalc
