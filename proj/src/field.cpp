#include "dgcalc/field.hpp"

#include <cstdlib>

namespace dgcalc {

static bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime_u32(p)) throw StructuralError("field characteristic must be prime, got " + std::to_string(p));
  return Field{p};
}

std::string Field::name() const { return p == 0 ? "Q" : "F" + std::to_string(p); }

Scalar Scalar::zero(Field f) { return Scalar(f, mpq_class(0), 0); }

Scalar Scalar::one(Field f) {
  if (f.is_rational()) return Scalar(f, mpq_class(1), 0);
  return Scalar(f, mpq_class(0), f.p == 1 ? 0u : 1u);
}

Scalar Scalar::from_int(Field f, long v) {
  if (f.is_rational()) return Scalar(f, mpq_class(v), 0);
  long r = v % static_cast<long>(f.p);
  if (r < 0) r += f.p;
  return Scalar(f, mpq_class(0), static_cast<std::uint32_t>(r));
}

Scalar Scalar::from_ratio(Field f, long num, long den) {
  if (den == 0) throw StructuralError("zero denominator");
  if (f.is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(f, q, 0);
  }
  return Scalar::from_int(f, num) / Scalar::from_int(f, den);
}

Scalar Scalar::parse(Field f, const std::string& text) {
  std::size_t slash = text.find('/');
  auto to_long = [&](const std::string& s) {
    if (s.empty()) throw StructuralError("empty numeral in scalar '" + text + "'");
    char* end = nullptr;
    long v = std::strtol(s.c_str(), &end, 10);
    if (end == nullptr || *end != '\0') throw StructuralError("bad scalar literal '" + text + "'");
    return v;
  };
  if (slash == std::string::npos) return Scalar::from_int(f, to_long(text));
  return Scalar::from_ratio(f, to_long(text.substr(0, slash)), to_long(text.substr(slash + 1)));
}

bool Scalar::is_zero() const { return f_.is_rational() ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return *this == Scalar::one(f_); }

void Scalar::require_same(const Scalar& o) const {
  if (!(f_ == o.f_))
    throw StructuralError("mixed-field arithmetic: " + f_.name() + " vs " + o.f_.name());
}

Scalar Scalar::operator-() const {
  if (f_.is_rational()) return Scalar(f_, -q_, 0);
  return Scalar(f_, mpq_class(0), r_ == 0 ? 0u : f_.p - r_);
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(o);
  if (f_.is_rational()) return Scalar(f_, q_ + o.q_, 0);
  std::uint64_t s = static_cast<std::uint64_t>(r_) + o.r_;
  return Scalar(f_, mpq_class(0), static_cast<std::uint32_t>(s % f_.p));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(o);
  if (f_.is_rational()) return Scalar(f_, q_ * o.q_, 0);
  std::uint64_t s = static_cast<std::uint64_t>(r_) * o.r_;
  return Scalar(f_, mpq_class(0), static_cast<std::uint32_t>(s % f_.p));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw StructuralError("division by zero in " + f_.name());
  if (f_.is_rational()) return Scalar(f_, 1 / q_, 0);
  /* extended Euclid on (r, p) */
  std::int64_t a = r_, m = f_.p, x0 = 1, x1 = 0;
  while (m != 0) {
    std::int64_t q = a / m;
    std::int64_t t = a - q * m; a = m; m = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
  }
  std::int64_t r = x0 % static_cast<std::int64_t>(f_.p);
  if (r < 0) r += f_.p;
  return Scalar(f_, mpq_class(0), static_cast<std::uint32_t>(r));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  require_same(o);
  return f_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (f_.is_rational()) return q_.get_str();
  return std::to_string(r_);
}

const mpq_class& Scalar::rational() const {
  if (!f_.is_rational()) throw StructuralError("rational() on an F_p scalar");
  return q_;
}

std::uint32_t Scalar::residue() const {
  if (f_.is_rational()) throw StructuralError("residue() on a Q scalar");
  return r_;
}

} // namespace dgcalc
