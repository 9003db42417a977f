#pragma once

#include <array>
#include <string>

#include <gmpxx.h>

namespace pqw {

// Element of Q(zeta_8) in the basis 1, z, z^2, z^3 with z^4 = -1. All
// coefficients are exact rationals; no floating point anywhere.
class Cyclotomic {
public:
  Cyclotomic() = default;
  static Cyclotomic rational(const mpq_class& q);
  static Cyclotomic integer(long v);
  // z^power for any integer power.
  static Cyclotomic zeta8(long power = 1);

  bool is_zero() const;
  bool is_rational() const;
  const mpq_class& coeff(int i) const { return c_[std::size_t(i)]; }

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  // Galois conjugate z -> z^k for odd k.
  Cyclotomic galois(int k) const;
  // Multiplicative inverse; throws ValidationError on zero.
  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  bool operator==(const Cyclotomic& o) const { return c_ == o.c_; }

  // Canonical human-readable form, e.g. "1 - 1/2*z8^3".
  std::string to_string() const;

private:
  std::array<mpq_class, 4> c_{};
};

}  // namespace pqw
