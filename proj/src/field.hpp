#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "errors.hpp"

namespace comptri {

// The active coefficient field: F_p for an odd prime p, or Q.
// Characteristic two is rejected everywhere (polarization identities
// divide by 2).
class Field {
 public:
  Field() = default;  // rationals

  static Field rationals() { return Field(); }
  static Field fp(uint32_t p);

  bool is_fp() const { return p_ != 0; }
  uint32_t p() const { return p_; }

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  std::string str() const {
    return is_fp() ? "fp:" + std::to_string(p_) : "q";
  }
  static Field parse(const std::string& s);

 private:
  uint32_t p_ = 0;  // 0 means Q
};

// An exact field element.  Values carry their field at runtime so one
// process can work over F_3, F_5 and Q side by side; every binary
// operation checks compatibility.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar of_int(const Field& f, long v);
  static Scalar of_fp(uint32_t p, uint64_t residue);
  static Scalar of_mpq(mpq_class q);

  // Accepts "n" or "n/d" (d > 0 after reduction); over F_p the value is
  // reduced mod p, with "n/d" meaning n * d^{-1}.
  static Scalar parse(const Field& f, const std::string& s);

  Field field() const {
    return p_ ? Field::fp(p_) : Field::rationals();
  }

  bool is_zero() const { return p_ ? r_ == 0 : q_ == 0; }
  bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;  // throws on zero

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  bool is_square() const;
  // Deterministic square root: smallest non-negative residue over F_p,
  // the positive root over Q.  Empty when the value is not a square.
  std::optional<Scalar> sqrt() const;

  std::string str() const;

  uint32_t fp_residue() const { return r_; }
  const mpq_class& rational() const { return q_; }

 private:
  void check_same(const Scalar& o) const {
    if (p_ != o.p_)
      throw Error::usage("mixed-field operands (" + field().str() + " vs " +
                         o.field().str() + ")");
  }

  uint32_t p_ = 0;  // 0 = rational
  uint32_t r_ = 0;  // residue in [0, p) when p_ != 0
  mpq_class q_;     // value when p_ == 0
};

}  // namespace comptri
