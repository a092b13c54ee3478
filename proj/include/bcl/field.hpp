#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "bcl/error.hpp"

namespace bcl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Coefficient field descriptor: a prime field F_p (2 <= p < 2^31) or Q.
struct FieldSpec {
  enum class Kind { prime, rationals };
  Kind kind = Kind::rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }
  static FieldSpec prime(std::uint32_t p);

  /// Accepts "Q", "F<p>" and "Fp:<p>".
  static FieldSpec parse(const std::string& s);
  std::string to_string() const;

  bool is_prime_field() const { return kind == Kind::prime; }
  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }
};

/// Arithmetic domain for F_p with runtime modulus. Elements live in [0, p).
class Fp {
 public:
  using Elem = std::uint64_t;

  explicit Fp(std::uint32_t p) : p_(p) {}

  std::uint64_t modulus() const { return p_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }  // p < 2^31, no overflow
  Elem inv(Elem a) const;
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Elem>(r);
  }

 private:
  std::uint64_t p_;
};

/// Arithmetic domain for Q backed by exact big rationals.
class Rationals {
 public:
  using Elem = Rational;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return Elem(1) / a; }
  Elem from_int(long long v) const { return Elem(v); }
};

// Exact binomials (big-integer internally).
BigInt binomial(long n, long k);

/// Product of componentwise binomials, prod_i C(c_i, b_i); zero unless b <= c.
BigInt binomial_product(const std::vector<int>& c, const std::vector<int>& b);

long long to_longlong(const BigInt& v);

}  // namespace bcl
