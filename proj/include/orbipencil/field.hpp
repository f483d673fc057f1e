#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "orbipencil/errors.hpp"

namespace orbipencil {

// Exact rational coefficient. Always reduced, denominator > 0 (mpq_class
// canonical form maintains both).
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(long n, long d) : v_(n, d) {
    if (d == 0) throw BadInput("zero denominator");
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rat(const mpz_class& z) : v_(z) {}

  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }

  bool is_zero() const { return v_ == 0; }
  int sign() const { return sgn(v_); }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw BadInput("division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

  Rat inverse() const {
    if (is_zero()) throw BadInput("inverse of zero");
    return Rat(mpq_class(1) / v_);
  }

  // num * den^{-1} mod p; nullopt when p divides the denominator
  std::optional<std::uint64_t> mod_p(std::uint64_t p, std::uint64_t /*sqrt3*/ = 0) const;

  std::string str() const { return v_.get_str(); }

  static constexpr bool has_radical = false;

 private:
  mpq_class v_;
};

// Q(sqrt 3), written a + b*u with u^2 = 3. Only the corpus uses it; the
// public grammar and all CLI surfaces stay over the rationals.
class Ext3 {
 public:
  Ext3() = default;
  Ext3(long n) : a_(n) {}
  Ext3(const Rat& r) : a_(r) {}
  Ext3(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

  static Ext3 zero() { return Ext3(); }
  static Ext3 one() { return Ext3(1); }
  static Ext3 radical() { return Ext3(Rat(0), Rat(1)); }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }

  Ext3 operator-() const { return Ext3(-a_, -b_); }
  Ext3& operator+=(const Ext3& o) { a_ += o.a_; b_ += o.b_; return *this; }
  Ext3& operator-=(const Ext3& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  Ext3& operator*=(const Ext3& o) {
    Rat a = a_ * o.a_ + Rat(3) * b_ * o.b_;
    Rat b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    return *this;
  }
  Ext3 inverse() const {
    // (a + b u)^{-1} = (a - b u) / (a^2 - 3 b^2); the norm vanishes only at 0
    Rat n = a_ * a_ - Rat(3) * b_ * b_;
    if (n.is_zero()) throw BadInput("inverse of zero");
    return Ext3(a_ / n, -b_ / n);
  }
  Ext3& operator/=(const Ext3& o) { return *this *= o.inverse(); }
  friend Ext3 operator+(Ext3 a, const Ext3& b) { return a += b; }
  friend Ext3 operator-(Ext3 a, const Ext3& b) { return a -= b; }
  friend Ext3 operator*(Ext3 a, const Ext3& b) { return a *= b; }
  friend Ext3 operator/(Ext3 a, const Ext3& b) { return a /= b; }
  friend bool operator==(const Ext3& a, const Ext3& b) {
    return a.a_ == b.a_ && a.b_ == b.b_;
  }
  friend bool operator!=(const Ext3& a, const Ext3& b) { return !(a == b); }

  std::optional<std::uint64_t> mod_p(std::uint64_t p, std::uint64_t sqrt3) const;

  std::string str() const;

  static constexpr bool has_radical = true;

 private:
  Rat a_, b_;
};

// Modular image bookkeeping shared by the gcd pre-check and the slice
// irreducibility test. For Ext3 a prime is usable only when 3 is a quadratic
// residue; prime_unit then carries a square root of 3 mod p.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::optional<std::uint64_t> sqrt3_mod(std::uint64_t p);

template <class K>
std::optional<std::uint64_t> prime_unit(std::uint64_t p) {
  if constexpr (K::has_radical) {
    return sqrt3_mod(p);
  } else {
    (void)p;
    return 0;
  }
}

}  // namespace orbipencil
