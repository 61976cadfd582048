#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "dist3/errors.hpp"

namespace dist3 {

// Coefficient fields are small value types passed around with the data they
// act on. All polynomial and matrix code is templated on the field type and
// calls arithmetic through it, so exact rationals and prime fields share one
// code path.

// Exact rationals backed by GMP. mpq_class keeps gcd(num, den) = 1 and
// den > 0, which is exactly the canonical form we need.
struct RationalField {
  using Elem = mpq_class;

  static constexpr bool is_prime_field = false;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long n) const { return Elem(n); }
  Elem from_rational(const mpq_class& q) const { return q; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw InputError("division by zero");
    return Elem(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool is_negative(const Elem& a) const { return a < 0; }

  bool same_field(const RationalField&) const { return true; }

  std::string to_string(const Elem& a) const { return a.get_str(); }
  std::string to_string_abs(const Elem& a) const { return Elem(abs(a)).get_str(); }
  std::string name() const { return "rational"; }
};

// F_p for an odd prime p < 2^31. Elements are representatives in [0, p);
// the modulus travels with the field object, never in global state.
struct PrimeField {
  using Elem = std::uint32_t;

  static constexpr bool is_prime_field = true;

  std::uint32_t p = 32003;

  PrimeField() = default;
  explicit PrimeField(std::uint32_t prime) : p(prime) {
    if (p < 3 || p % 2 == 0) throw InputError("prime field characteristic must be an odd prime");
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long n) const {
    long r = n % static_cast<long>(p);
    if (r < 0) r += p;
    return static_cast<Elem>(r);
  }
  Elem from_rational(const mpq_class& q) const {
    Elem num = static_cast<Elem>(mpz_fdiv_ui(q.get_num().get_mpz_t(), p));
    Elem den = static_cast<Elem>(mpz_fdiv_ui(q.get_den().get_mpz_t(), p));
    if (den == 0)
      throw InputError("denominator divisible by the field characteristic " + std::to_string(p));
    return mul(num, inv(den));
  }

  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw InputError("division by zero");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    return static_cast<Elem>(t < 0 ? t + p : t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool eq(Elem a, Elem b) const { return a == b; }
  // Elements print as balanced lifts, so values above p/2 count as negative.
  bool is_negative(Elem a) const { return a > p / 2; }

  bool same_field(const PrimeField& o) const { return p == o.p; }

  std::string to_string(Elem a) const {
    if (a > p / 2) return "-" + std::to_string(p - a);
    return std::to_string(a);
  }
  std::string to_string_abs(Elem a) const {
    return std::to_string(a > p / 2 ? p - a : a);
  }
  std::string name() const { return "fp:" + std::to_string(p); }
};

}  // namespace dist3
