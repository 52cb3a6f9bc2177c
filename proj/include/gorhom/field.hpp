#pragma once
// Exact scalars: arbitrary-precision rationals (GMP-backed) and prime fields
// F_p with canonical representatives in [0, p). No floating point anywhere.
#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "gorhom/error.hpp"

namespace gorhom {

struct FieldSpec {
  enum class Kind { Q, Fp };
  Kind kind = Kind::Q;
  std::uint64_t p = 0;

  static FieldSpec rationals() { return {Kind::Q, 0}; }
  static FieldSpec prime(std::uint64_t p) { return {Kind::Fp, p}; }
  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
  std::string str() const {
    return kind == Kind::Q ? std::string("Q") : "F" + std::to_string(p);
  }
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace detail

// F_p. Elements are uint64 values already reduced into [0, p).
struct PrimeField {
  using Elem = std::uint64_t;
  std::uint64_t p = 2;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (!detail::is_prime_u64(p)) throw input_error("field modulus " + std::to_string(p) + " is not prime");
    if (p >= (1ull << 62)) throw input_error("field modulus too large");
  }

  FieldSpec spec() const { return FieldSpec::prime(p); }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p ? s - p : s; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const { return detail::mulmod(a, b, p); }
  Elem inv(Elem a) const {
    if (a == 0) throw input_error("division by zero in F_" + std::to_string(p));
    // extended Euclid on (a, p)
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<Elem>(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem from_long(long long v) const {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<Elem>(m);
  }
  // integer powers; negative exponents go through the inverse
  Elem pow(Elem a, long long e) const {
    if (e < 0) return detail::powmod(inv(a), static_cast<std::uint64_t>(-e), p);
    return detail::powmod(a, static_cast<std::uint64_t>(e), p);
  }
  Elem from_string(const std::string& s) const;
  std::string str(Elem a) const { return std::to_string(a); }
};

// Q with exact arithmetic. mpq_class keeps values canonical.
struct RationalField {
  using Elem = mpq_class;

  FieldSpec spec() const { return FieldSpec::rationals(); }
  Elem zero() const { return mpq_class(0); }
  Elem one() const { return mpq_class(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool eq(const Elem& a, const Elem& b) const { return cmp(a, b) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw input_error("division by zero in Q");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem from_long(long long v) const { return mpq_class(static_cast<long>(v)); }
  Elem pow(const Elem& a, long long e) const {
    Elem base = e < 0 ? inv(a) : a;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Elem r = one();
    while (n) {
      if (n & 1) r *= base;
      base *= base;
      n >>= 1;
    }
    return r;
  }
  Elem from_string(const std::string& s) const {
    try {
      mpq_class v(s, 10);
      if (v.get_den() == 0) throw input_error("zero denominator in rational literal '" + s + "'");
      v.canonicalize();
      return v;
    } catch (const std::invalid_argument&) {
      throw input_error("bad rational literal '" + s + "'");
    }
  }
  std::string str(const Elem& a) const { return a.get_str(); }
};

inline PrimeField::Elem PrimeField::from_string(const std::string& s) const {
  // accepts "n" and "n/d" with arbitrary-size integers, reduced mod p
  RationalField q;
  mpq_class v = q.from_string(s);
  mpz_class num = v.get_num() % static_cast<unsigned long>(p);
  mpz_class den = v.get_den() % static_cast<unsigned long>(p);
  Elem n = from_long(num.get_si());
  Elem d = from_long(den.get_si());
  if (d == 0) throw input_error("literal '" + s + "' has denominator divisible by " + std::to_string(p));
  return div(n, d);
}

// Multiplicative order of a unit; 0 means infinite order.
inline long long order_of_unit(const PrimeField& f, PrimeField::Elem a) {
  if (a == 0) throw input_error("order of zero is undefined");
  PrimeField::Elem x = a;
  long long s = 1;
  while (x != f.one()) {
    x = f.mul(x, a);
    ++s;
    if (static_cast<std::uint64_t>(s) > f.p) throw internal_error("order search exceeded group size");
  }
  return s;
}

inline long long order_of_unit(const RationalField& f, const RationalField::Elem& a) {
  if (f.is_zero(a)) throw input_error("order of zero is undefined");
  if (f.eq(a, f.one())) return 1;
  if (f.eq(a, f.from_long(-1))) return 2;
  return 0;  // the only rationals of finite multiplicative order are +-1
}

}  // namespace gorhom
