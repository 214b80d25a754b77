#pragma once

// Exact coefficient fields: the rationals and prime fields F_p with p odd.
//
// Both field types expose the same small interface (value_type, zero, one,
// add, sub, neg, mul, inv, isZero) so that the linear algebra and the
// engine can be written once as templates. Coefficients crossing the public
// API are always `Rational`; in characteristic p they are the symmetric
// representative of the residue class, so -1 prints as -1 rather than p-1.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace lieforge {

using Rational = mpq_class;

struct FieldSpec {
  std::uint32_t characteristic = 0;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

class FieldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

bool isPrime(std::uint64_t n);

class RationalField {
 public:
  using value_type = Rational;

  std::uint32_t characteristic() const { return 0; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const;

  bool isZero(const value_type& a) const { return sgn(a) == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  value_type fromInteger(std::int64_t n) const { return Rational(static_cast<long>(n)); }
  value_type fromRational(const Rational& q) const { return q; }
  Rational toRational(const value_type& a) const { return a; }
};

class PrimeField {
 public:
  using value_type = std::uint32_t;

  // p must be an odd prime below 2^31; see makeField for the checked path.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }

  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type inv(value_type a) const;

  bool isZero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }

  value_type fromInteger(std::int64_t n) const;
  value_type fromRational(const Rational& q) const;
  // Symmetric lift into (-p/2, p/2].
  Rational toRational(value_type a) const;

 private:
  std::uint32_t p_;
};

using Field = std::variant<RationalField, PrimeField>;

// Throws FieldError for characteristic 2, composite values and values that
// do not fit the 31-bit residue arithmetic.
Field makeField(FieldSpec spec);

// Brings a boundary coefficient into canonical form for the given field:
// unchanged over Q, symmetric residue over F_p.
Rational reduceCoefficient(const FieldSpec& spec, const Rational& q);

std::string toString(const Rational& q);

}  // namespace lieforge
