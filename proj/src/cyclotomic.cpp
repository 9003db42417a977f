#include "pqw/cyclotomic.hpp"

#include <sstream>

#include "pqw/errors.hpp"

namespace pqw {

Cyclotomic Cyclotomic::rational(const mpq_class& q) {
  Cyclotomic x;
  x.c_[0] = q;
  x.c_[0].canonicalize();
  return x;
}

Cyclotomic Cyclotomic::integer(long v) { return rational(mpq_class(v)); }

Cyclotomic Cyclotomic::zeta8(long power) {
  long p = ((power % 8) + 8) % 8;
  Cyclotomic x;
  x.c_[std::size_t(p % 4)] = p < 4 ? 1 : -1;
  return x;
}

bool Cyclotomic::is_zero() const {
  for (const auto& q : c_) {
    if (q != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  Cyclotomic x;
  for (int i = 0; i < 4; ++i) x.c_[std::size_t(i)] = c_[std::size_t(i)] + o.c_[std::size_t(i)];
  return x;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  Cyclotomic x;
  for (int i = 0; i < 4; ++i) x.c_[std::size_t(i)] = c_[std::size_t(i)] - o.c_[std::size_t(i)];
  return x;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic x;
  for (int i = 0; i < 4; ++i) x.c_[std::size_t(i)] = -c_[std::size_t(i)];
  return x;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  Cyclotomic x;
  for (int i = 0; i < 4; ++i) {
    if (c_[std::size_t(i)] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (o.c_[std::size_t(j)] == 0) continue;
      mpq_class prod = c_[std::size_t(i)] * o.c_[std::size_t(j)];
      int k = i + j;
      if (k >= 4) {
        k -= 4;
        prod = -prod;  // z^4 = -1
      }
      x.c_[std::size_t(k)] += prod;
    }
  }
  return x;
}

Cyclotomic Cyclotomic::galois(int k) const {
  check_input(k % 2 != 0, "Galois conjugation needs an odd exponent");
  Cyclotomic x;
  for (int i = 0; i < 4; ++i) {
    if (c_[std::size_t(i)] == 0) continue;
    int p = ((i * k) % 8 + 8) % 8;
    if (p < 4) {
      x.c_[std::size_t(p)] += c_[std::size_t(i)];
    } else {
      x.c_[std::size_t(p - 4)] -= c_[std::size_t(i)];
    }
  }
  return x;
}

Cyclotomic Cyclotomic::inverse() const {
  check_input(!is_zero(), "inversion of zero in Q(zeta_8)");
  // x^-1 = (product of the other Galois conjugates) / Norm(x).
  Cyclotomic rest = galois(3) * galois(5) * galois(7);
  Cyclotomic norm = *this * rest;
  check_internal(norm.is_rational() && norm.c_[0] != 0, "norm is not a nonzero rational");
  Cyclotomic x;
  for (int i = 0; i < 4; ++i) {
    x.c_[std::size_t(i)] = rest.c_[std::size_t(i)] / norm.c_[0];
    x.c_[std::size_t(i)].canonicalize();
  }
  return x;
}

Cyclotomic Cyclotomic::pow(long e) const {
  Cyclotomic base = e >= 0 ? *this : inverse();
  long n = e >= 0 ? e : -e;
  Cyclotomic r = integer(1);
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    const mpq_class& q = c_[std::size_t(i)];
    if (q == 0) continue;
    mpq_class a = q;
    if (first) {
      if (a < 0) {
        out << '-';
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (i == 0 || a != 1) out << a.get_str();
    if (i > 0) {
      if (a != 1) out << '*';
      out << "z8";
      if (i > 1) out << '^' << i;
    }
  }
  if (first) out << '0';
  return out.str();
}

}  // namespace pqw
