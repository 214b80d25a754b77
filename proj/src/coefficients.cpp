#include "lieforge/coefficients.hpp"

namespace lieforge {

bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

RationalField::value_type RationalField::inv(const value_type& a) const {
  if (isZero(a)) throw FieldError("division by zero");
  return 1 / a;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= (1u << 31) || !isPrime(p))
    throw FieldError("characteristic " + std::to_string(p) + " is not a supported odd prime");
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw FieldError("division by zero");
  // extended Euclid on (a, p)
  std::int64_t r0 = p_, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t0 < 0) t0 += p_;
  return static_cast<value_type>(t0);
}

PrimeField::value_type PrimeField::fromInteger(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<value_type>(r);
}

PrimeField::value_type PrimeField::fromRational(const Rational& q) const {
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0)
    throw FieldError("coefficient " + q.get_str() + " has a denominator divisible by " +
                     std::to_string(p_));
  return mul(static_cast<value_type>(num.get_ui()), inv(static_cast<value_type>(den.get_ui())));
}

Rational PrimeField::toRational(value_type a) const {
  if (a > p_ / 2) return Rational(-static_cast<long>(p_ - a));
  return Rational(static_cast<long>(a));
}

Field makeField(FieldSpec spec) {
  if (spec.characteristic == 0) return RationalField{};
  if (spec.characteristic == 2)
    throw FieldError("characteristic 2 is not supported: the super sign degenerates");
  if (!isPrime(spec.characteristic))
    throw FieldError("characteristic " + std::to_string(spec.characteristic) + " is composite");
  return PrimeField(spec.characteristic);
}

Rational reduceCoefficient(const FieldSpec& spec, const Rational& q) {
  if (spec.characteristic == 0) return q;
  PrimeField f(spec.characteristic);
  return f.toRational(f.fromRational(q));
}

std::string toString(const Rational& q) { return q.get_str(); }

}  // namespace lieforge
