#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orbipencil/errors.hpp"
#include "orbipencil/field.hpp"

namespace orbipencil {

inline constexpr int kNumVars = 3;
inline constexpr char kVarNames[kNumVars] = {'x', 'y', 'z'};

struct Monomial {
  std::array<int, kNumVars> e{0, 0, 0};

  int degree() const { return e[0] + e[1] + e[2]; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }

  bool divides(const Monomial& o) const {
    return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2];
  }
  Monomial operator*(const Monomial& o) const {
    return Monomial{{e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]}};
  }
  Monomial operator/(const Monomial& o) const {
    return Monomial{{e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2]}};
  }
};

// graded lexicographic, largest first; map iteration starts at the leading term
struct GrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.e > b.e;
  }
};

// Sparse trivariate polynomial over an exact coefficient field K.
// Terms are kept in canonical graded-lex order and never store a zero.
template <class K>
class Polynomial {
 public:
  using TermMap = std::map<Monomial, K, GrlexDesc>;

  Polynomial() = default;
  explicit Polynomial(const K& c) {
    if (!c.is_zero()) terms_[Monomial{}] = c;
  }
  Polynomial(const K& c, const Monomial& m) {
    if (!c.is_zero()) terms_[m] = c;
  }

  static Polynomial variable(int i) {
    Monomial m;
    m.e[i] = 1;
    return Polynomial(K::one(), m);
  }
  static Polynomial constant(long n) { return Polynomial(K(n)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
  }
  K constant_value() const {
    if (terms_.empty()) return K::zero();
    return terms_.begin()->second;
  }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
  int degree_in(int var) const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.e[var]);
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const K& leading_coefficient() const { return terms_.begin()->second; }

  void add_term(const Monomial& m, const K& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }
  Polynomial operator-() const {
    Polynomial r;
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Polynomial scaled(const K& c) const {
    Polynomial r;
    if (c.is_zero()) return r;
    for (auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  Polynomial pow(long k) const {
    if (k < 0) throw BadInput("negative exponent");
    Polynomial r = Polynomial(K::one());
    Polynomial base = *this;
    while (k) {
      if (k & 1) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }

  Polynomial derivative(int var) const {
    Polynomial r;
    for (auto& [m, c] : terms_) {
      if (m.e[var] == 0) continue;
      Monomial d = m;
      d.e[var] -= 1;
      r.add_term(d, c * K(m.e[var]));
    }
    return r;
  }

  // quotient when the division is exact, nullopt otherwise
  std::optional<Polynomial> divide_exact(const Polynomial& g) const {
    if (g.is_zero()) throw BadInput("division by zero polynomial");
    Polynomial q, r = *this;
    const Monomial& lmg = g.leading_monomial();
    K lcg_inv = g.leading_coefficient().inverse();
    while (!r.is_zero()) {
      const Monomial& lm = r.leading_monomial();
      if (!lmg.divides(lm)) return std::nullopt;
      K c = r.leading_coefficient() * lcg_inv;
      Monomial qm = lm / lmg;
      q.add_term(qm, c);
      r = r - g.scaled(c) * Polynomial(K::one(), qm);
    }
    return q;
  }

  // leading coefficient scaled to 1 (graded-lex leading term)
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coefficient().inverse());
  }

  // true when a == c*b for some nonzero scalar c
  static bool proportional(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.terms_.size() != b.terms_.size()) return false;
    return a.monic() == b.monic();
  }

  // evaluate modulo p at integer point (vals), coefficients mapped through K
  std::optional<std::uint64_t> eval_mod_p(const std::array<std::uint64_t, 3>& vals,
                                          std::uint64_t p, std::uint64_t unit) const {
    int maxdeg[3] = {degree_in(0), degree_in(1), degree_in(2)};
    std::array<std::vector<std::uint64_t>, 3> pw;
    for (int v = 0; v < 3; ++v) {
      pw[v].resize(maxdeg[v] + 1);
      pw[v][0] = 1 % p;
      for (int i = 1; i <= maxdeg[v]; ++i) pw[v][i] = pw[v][i - 1] * (vals[v] % p) % p;
    }
    std::uint64_t acc = 0;
    for (auto& [m, c] : terms_) {
      auto cv = c.mod_p(p, unit);
      if (!cv) return std::nullopt;
      std::uint64_t t = *cv;
      for (int v = 0; v < 3; ++v) t = t * pw[v][m.e[v]] % p;
      acc = (acc + t) % p;
    }
    return acc;
  }

  // restriction to the parametrized line s*v0 + v1; coefficient k of the
  // result multiplies s^k, so full degree means f(v0) != 0
  std::vector<K> restrict_to_line(const std::array<long, 3>& v0,
                                  const std::array<long, 3>& v1) const {
    std::vector<K> acc{K::zero()};
    auto mul1 = [](const std::vector<K>& a, const K& c0, const K& c1) {
      // multiply by (c0*s + c1)
      std::vector<K> r(a.size() + 1, K::zero());
      for (std::size_t i = 0; i < a.size(); ++i) {
        r[i + 1] += a[i] * c0;
        r[i] += a[i] * c1;
      }
      return r;
    };
    for (auto& [m, c] : terms_) {
      std::vector<K> t{c};
      for (int v = 0; v < 3; ++v)
        for (int i = 0; i < m.e[v]; ++i) t = mul1(t, K(v0[v]), K(v1[v]));
      if (t.size() > acc.size()) acc.resize(t.size(), K::zero());
      for (std::size_t i = 0; i < t.size(); ++i) acc[i] += t[i];
    }
    while (acc.size() > 1 && acc.back().is_zero()) acc.pop_back();
    return acc;
  }

  std::string str() const;

 private:
  TermMap terms_;
};

namespace detail {

inline std::string rat_coeff_prefix(const Rat& c, bool first, bool lone) {
  // sign folded into the coefficient; "1*" and "-1*" are elided
  std::string s;
  Rat a = c;
  if (c.sign() < 0) {
    s += first ? "-" : " - ";
    a = -c;
  } else if (!first) {
    s += " + ";
  }
  if (lone || a != Rat(1)) {
    s += a.str();
    if (!lone) s += "*";
  }
  return s;
}

inline std::string coeff_prefix(const Rat& c, bool first, bool lone) {
  return rat_coeff_prefix(c, first, lone);
}

inline std::string coeff_prefix(const Ext3& c, bool first, bool lone) {
  if (c.is_rational()) return rat_coeff_prefix(c.a(), first, lone);
  std::string s = first ? "" : " + ";
  s += "(" + c.str() + ")";
  if (!lone) s += "*";
  return s;
}

}  // namespace detail

template <class K>
std::string Polynomial<K>::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [m, c] : terms_) {
    bool lone = m.degree() == 0;
    out << detail::coeff_prefix(c, first, lone);
    bool needs_star = false;
    for (int v = 0; v < kNumVars; ++v) {
      if (m.e[v] == 0) continue;
      if (needs_star) out << "*";
      out << kVarNames[v];
      if (m.e[v] > 1) out << "^" << m.e[v];
      needs_star = true;
    }
    first = false;
  }
  return out.str();
}

using PolyQ = Polynomial<Rat>;
using PolyE = Polynomial<Ext3>;

}  // namespace orbipencil
