#include "liemorse/ring.hpp"

#include <charconv>

#include "liemorse/errors.hpp"

namespace liemorse {

CoefficientRing CoefficientRing::modular(std::uint64_t modulus) {
  if (modulus < 2) {
    throw InvalidArgument("modulus must be at least 2, got " + std::to_string(modulus));
  }
  // Residue products must fit in 128 bits during field elimination.
  if (modulus > (std::uint64_t{1} << 62)) {
    throw InvalidArgument("modulus too large: " + std::to_string(modulus));
  }
  return CoefficientRing(Kind::ModularIntegers, modulus);
}

CoefficientRing CoefficientRing::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.size() > 2 && text.substr(0, 2) == "Z/") {
    std::uint64_t m = 0;
    auto digits = text.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return modular(m);
  }
  throw InvalidArgument("bad ring selector '" + std::string(text) + "' (expected Z, Q or Z/<m>)");
}

bool CoefficientRing::is_field() const {
  return kind_ == Kind::Rationals || (kind_ == Kind::ModularIntegers && is_prime(modulus_));
}

std::string CoefficientRing::name() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::ModularIntegers:
      return "Z/" + std::to_string(modulus_);
  }
  return "?";
}

namespace {

Integer modulus_as_integer(std::uint64_t m) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
  return z;
}

Integer residue(const Integer& value, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

Scalar CoefficientRing::reduce(const Scalar& value) const {
  switch (kind_) {
    case Kind::Rationals:
      return value;
    case Kind::Integers:
      if (value.get_den() != 1) {
        throw InvalidArgument("non-integral value " + value.get_str() + " in Z");
      }
      return value;
    case Kind::ModularIntegers: {
      const Integer m = modulus_as_integer(modulus_);
      Integer num = residue(value.get_num(), m);
      if (value.get_den() == 1) return Scalar(num);
      Integer inv;
      if (mpz_invert(inv.get_mpz_t(), value.get_den().get_mpz_t(), m.get_mpz_t()) == 0) {
        throw NonUnit("denominator " + value.get_den().get_str() + " is not a unit in " + name());
      }
      return Scalar(residue(Integer(num * inv), m));
    }
  }
  return value;
}

bool CoefficientRing::is_unit(const Scalar& value) const {
  switch (kind_) {
    case Kind::Rationals:
      return value != 0;
    case Kind::Integers:
      return value.get_den() == 1 && abs(value.get_num()) == 1;
    case Kind::ModularIntegers: {
      const Scalar r = reduce(value);
      Integer g;
      const Integer m = modulus_as_integer(modulus_);
      mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), m.get_mpz_t());
      return g == 1;
    }
  }
  return false;
}

Scalar CoefficientRing::inverse(const Scalar& value) const {
  if (!is_unit(value)) {
    throw NonUnit(value.get_str() + " is not a unit in " + name());
  }
  switch (kind_) {
    case Kind::Rationals:
      return Scalar(1) / value;
    case Kind::Integers:
      return value;  // +-1
    case Kind::ModularIntegers: {
      const Integer m = modulus_as_integer(modulus_);
      const Scalar r = reduce(value);
      Integer inv;
      mpz_invert(inv.get_mpz_t(), r.get_num().get_mpz_t(), m.get_mpz_t());
      return Scalar(inv);
    }
  }
  return value;
}

bool is_integer_unit(const Integer& k, const CoefficientRing& ring) {
  return ring.is_unit(Scalar(k));
}

Scalar invert_integer(const Integer& k, const CoefficientRing& ring) {
  if (!is_integer_unit(k, ring)) {
    throw NonUnit(k.get_str() + " is not a unit in " + ring.name());
  }
  return ring.inverse(Scalar(k));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace liemorse
