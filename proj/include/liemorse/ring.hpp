#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace liemorse {

/// Exact scalar. Over Z and Z/m every stored value is an integer
/// (Z/m values are kept as residues in [0, m)); over Q it may be any rational.
using Scalar = mpq_class;
using Integer = mpz_class;

/// Coefficient ring: Z, Q or Z/m with m >= 2.
class CoefficientRing {
 public:
  enum class Kind { Integers, Rationals, ModularIntegers };

  static CoefficientRing integers() { return CoefficientRing(Kind::Integers, 0); }
  static CoefficientRing rationals() { return CoefficientRing(Kind::Rationals, 0); }
  static CoefficientRing modular(std::uint64_t modulus);

  /// Parses "Z", "Q" or "Z/<m>".
  static CoefficientRing parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_integers() const { return kind_ == Kind::Integers; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }
  bool is_modular() const { return kind_ == Kind::ModularIntegers; }

  /// Q, or Z/p with p prime.
  bool is_field() const;
  std::string name() const;

  /// Canonical representative of the image of `value` in the ring.
  /// Z/m requires an integer or a rational whose denominator is a unit.
  Scalar reduce(const Scalar& value) const;
  Scalar reduce(const Integer& value) const { return reduce(Scalar(value)); }
  Scalar reduce(long value) const { return reduce(Scalar(value)); }

  bool is_zero(const Scalar& value) const { return reduce(value) == 0; }
  bool is_unit(const Scalar& value) const;

  /// Inverse of a unit; throws NonUnit otherwise.
  Scalar inverse(const Scalar& value) const;

  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(Scalar(a + b)); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(Scalar(a - b)); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(Scalar(a * b)); }
  Scalar neg(const Scalar& a) const { return reduce(Scalar(-a)); }

  friend bool operator==(const CoefficientRing& a, const CoefficientRing& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  CoefficientRing(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint64_t modulus_;
};

/// True iff the image of the integer k in R is invertible.
bool is_integer_unit(const Integer& k, const CoefficientRing& ring);
inline bool is_integer_unit(long k, const CoefficientRing& ring) {
  return is_integer_unit(Integer(k), ring);
}

/// s with s*k = 1 in R. Throws NonUnit when k is not a unit.
Scalar invert_integer(const Integer& k, const CoefficientRing& ring);
inline Scalar invert_integer(long k, const CoefficientRing& ring) {
  return invert_integer(Integer(k), ring);
}

bool is_prime(std::uint64_t n);

}  // namespace liemorse
