#include "dgcalc/complex.hpp"

#include <sstream>

namespace dgcalc {

void Window::require(int n, const std::string& what) const {
  if (!contains(n)) {
    std::ostringstream os;
    os << what << ": degree " << n << " is outside the window " << str();
    throw WindowError(os.str());
  }
}

Window Window::intersect(Window a, Window b) {
  Window w{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
  if (w.lo > w.hi) throw StructuralError("empty window intersection of " + a.str() + " and " + b.str());
  return w;
}

std::string Window::str() const {
  std::ostringstream os;
  os << "[" << lo << "," << hi << "]";
  return os.str();
}

const std::vector<std::string> GradedSpace::kEmpty;

void GradedSpace::set_basis(int n, std::vector<std::string> labels) {
  w_.require(n, "set_basis");
  labels_[n] = std::move(labels);
}

std::size_t GradedSpace::dim(int n) const {
  w_.require(n, "dim");
  auto it = labels_.find(n);
  return it == labels_.end() ? 0 : it->second.size();
}

const std::vector<std::string>& GradedSpace::labels(int n) const {
  w_.require(n, "labels");
  auto it = labels_.find(n);
  return it == labels_.end() ? kEmpty : it->second;
}

std::size_t GradedSpace::total_dim() const {
  std::size_t t = 0;
  for (const auto& [n, l] : labels_) t += l.size();
  return t;
}

CochainComplex::CochainComplex(GradedSpace gr) : gr_(std::move(gr)) {
  for (int n = window().lo; n < window().hi; ++n)
    d_.emplace(n, Matrix(field(), gr_.dim(n + 1), gr_.dim(n)));
}

void CochainComplex::set_diff(int n, Matrix d) {
  window().require(n, "set_diff");
  window().require(n + 1, "set_diff target");
  if (d.rows() != gr_.dim(n + 1) || d.cols() != gr_.dim(n))
    throw StructuralError("differential shape mismatch at degree " + std::to_string(n));
  d_.at(n) = std::move(d);
}

const Matrix& CochainComplex::diff(int n) const {
  window().require(n, "diff");
  window().require(n + 1, "diff target");
  return d_.at(n);
}

std::vector<std::string> CochainComplex::check_d_squared() const {
  std::vector<std::string> bad;
  for (int n = window().lo; n + 1 < window().hi; ++n) {
    if (!(diff(n + 1) * diff(n)).is_zero()) {
      std::ostringstream os;
      os << "d.d != 0 from degree " << n << " to " << n + 2;
      bad.push_back(os.str());
    }
  }
  return bad;
}

CochainComplex::Cohomology CochainComplex::cohomology(int n) const {
  SubquotientBasis b = class_basis(n);
  Cohomology h;
  h.dim = b.dim();
  std::vector<Vec> ker = nullspace(diff(n));
  for (std::size_t idx : b.chosen()) h.representatives.push_back(ker[idx]);
  return h;
}

SubquotientBasis CochainComplex::class_basis(int n) const {
  window().require(n - 1, "cohomology");
  window().require(n, "cohomology");
  window().require(n + 1, "cohomology");
  if (!(diff(n) * diff(n - 1)).is_zero())
    throw PreconditionError("cohomology at degree " + std::to_string(n) + ": d.d != 0 there");
  std::vector<Vec> image;
  const Matrix& dprev = diff(n - 1);
  for (std::size_t j = 0; j < dprev.cols(); ++j) image.push_back(dprev.column(j));
  return SubquotientBasis(field(), gr_.dim(n), image, nullspace(diff(n)));
}

long long CochainComplex::euler_characteristic() const {
  long long chi = 0;
  for (int n = window().lo; n <= window().hi; ++n) {
    long long d = static_cast<long long>(gr_.dim(n));
    chi += (n % 2 == 0) ? d : -d;
  }
  return chi;
}

} // namespace dgcalc
