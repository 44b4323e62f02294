#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "dgcalc/errors.hpp"

namespace dgcalc {

/* Coefficient field descriptor: the rationals (p == 0) or a prime field F_p.
 * Every scalar, matrix and tabulated category carries one; operations across
 * distinct fields are rejected, never coerced. */
struct Field {
  std::uint32_t p = 0;

  static Field rationals() { return Field{0}; }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;
  std::string name() const;
};

/* Exact field element. Over Q the value lives in a GMP rational (always
 * canonical); over F_p it is the residue in [0, p). No floats anywhere. */
class Scalar {
 public:
  Scalar() : f_{0}, q_(0), r_(0) {}
  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(Field f, long v);
  static Scalar from_ratio(Field f, long num, long den);
  /* Accepts "7", "-3", "2/5"; over F_p a/b means a * b^-1. */
  static Scalar parse(Field f, const std::string& text);

  Field field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

  /* Over Q only: the underlying rational (used by the fraction-free pass). */
  const mpq_class& rational() const;
  std::uint32_t residue() const;

 private:
  Scalar(Field f, mpq_class q, std::uint32_t r) : f_(f), q_(std::move(q)), r_(r) {}
  void require_same(const Scalar& o) const;

  Field f_;
  mpq_class q_;
  std::uint32_t r_;
};

} // namespace dgcalc
