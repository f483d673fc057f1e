#include "orbipencil/field.hpp"

#include <map>

namespace orbipencil {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

std::optional<std::uint64_t> sqrt3_mod(std::uint64_t p) {
  static std::map<std::uint64_t, std::optional<std::uint64_t>> cache;
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  std::optional<std::uint64_t> res;
  if (p > 3 && mod_pow(3, (p - 1) / 2, p) == 1) {
    // primes here stay ~1e6, a direct scan is fine and runs once per prime
    for (std::uint64_t s = 2; s < p; ++s) {
      if (s * s % p == 3 % p) {
        res = s;
        break;
      }
    }
  }
  cache[p] = res;
  return res;
}

static std::optional<std::uint64_t> mpz_mod_u(const mpz_class& z, std::uint64_t p) {
  mpz_class m = z % static_cast<unsigned long>(p);
  if (m < 0) m += static_cast<unsigned long>(p);
  return m.get_ui();
}

std::optional<std::uint64_t> Rat::mod_p(std::uint64_t p, std::uint64_t) const {
  auto n = mpz_mod_u(num(), p);
  auto d = mpz_mod_u(den(), p);
  if (*d == 0) return std::nullopt;
  return *n * mod_pow(*d, p - 2, p) % p;
}

std::optional<std::uint64_t> Ext3::mod_p(std::uint64_t p, std::uint64_t sqrt3) const {
  auto av = a_.mod_p(p);
  auto bv = b_.mod_p(p);
  if (!av || !bv) return std::nullopt;
  return (*av + *bv * (sqrt3 % p)) % p;
}

std::string Ext3::str() const {
  if (b_.is_zero()) return a_.str();
  std::string s;
  if (!a_.is_zero()) {
    s += a_.str();
    s += b_.sign() < 0 ? " - " : " + ";
    Rat ab = b_.sign() < 0 ? -b_ : b_;
    if (ab != Rat(1)) s += ab.str() + "*";
    s += "u";
  } else {
    if (b_ == Rat(1)) return "u";
    if (b_ == Rat(-1)) return "-u";
    s = b_.str() + "*u";
  }
  return s;
}

}  // namespace orbipencil
