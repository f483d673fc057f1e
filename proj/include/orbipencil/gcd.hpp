#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "orbipencil/modp.hpp"
#include "orbipencil/polynomial.hpp"
#include "orbipencil/rng.hpp"

namespace orbipencil {

namespace detail {

// univariate view in one main variable, coefficients are polynomials in the
// remaining variables (their main-variable exponent is zero)
template <class K>
using UPoly = std::vector<Polynomial<K>>;

template <class K>
UPoly<K> to_univariate(const Polynomial<K>& f, int v) {
  UPoly<K> u(f.degree_in(v) + 1);
  for (auto& [m, c] : f.terms()) {
    Monomial r = m;
    int e = r.e[v];
    r.e[v] = 0;
    u[e].add_term(r, c);
  }
  while (!u.empty() && u.back().is_zero()) u.pop_back();
  return u;
}

template <class K>
Polynomial<K> from_univariate(const UPoly<K>& u, int v) {
  Polynomial<K> f;
  Monomial xv;
  for (std::size_t e = 0; e < u.size(); ++e) {
    xv.e[v] = static_cast<int>(e);
    f = f + u[e] * Polynomial<K>(K::one(), xv);
  }
  return f;
}

template <class K>
void trim(UPoly<K>& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

// pseudo-remainder of a by b in the main variable; result not normalized
template <class K>
UPoly<K> pseudo_rem(UPoly<K> r, const UPoly<K>& b) {
  const Polynomial<K>& lcb = b.back();
  while (r.size() >= b.size()) {
    Polynomial<K> lcr = r.back();
    std::size_t shift = r.size() - b.size();
    UPoly<K> next(r.size() - 1);
    for (std::size_t i = 0; i + 1 < r.size(); ++i) next[i] = r[i] * lcb;
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
      next[i + shift] = next[i + shift] - b[i] * lcr;
    r = std::move(next);
    trim(r);
    if (r.empty()) break;
  }
  return r;
}

template <class K>
Polynomial<K> gcd_impl(const Polynomial<K>& f, const Polynomial<K>& g);

template <class K>
Polynomial<K> content_in(const UPoly<K>& u) {
  Polynomial<K> c;
  for (const auto& coeff : u) {
    if (coeff.is_zero()) continue;
    if (coeff.is_constant()) return Polynomial<K>(K::one());
    c = c.is_zero() ? coeff : gcd_impl(c, coeff);
    if (c.is_constant()) return Polynomial<K>(K::one());
  }
  return c.is_zero() ? Polynomial<K>() : c.monic();
}

template <class K>
Polynomial<K> gcd_impl(const Polynomial<K>& f, const Polynomial<K>& g) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return Polynomial<K>(K::one());

  int v = -1, best = 0;
  for (int i = 0; i < kNumVars; ++i) {
    int d = std::max(f.degree_in(i), g.degree_in(i));
    if (d > best) {
      best = d;
      v = i;
    }
  }

  int df = f.degree_in(v), dg = g.degree_in(v);
  if (df == 0) {
    UPoly<K> ug = to_univariate(g, v);
    return gcd_impl(content_in(ug), f).monic();
  }
  if (dg == 0) {
    UPoly<K> uf = to_univariate(f, v);
    return gcd_impl(content_in(uf), g).monic();
  }

  UPoly<K> uf = to_univariate(f, v), ug = to_univariate(g, v);
  Polynomial<K> cf = content_in(uf), cg = content_in(ug);
  Polynomial<K> c = gcd_impl(cf, cg);

  auto divide_out = [](const Polynomial<K>& p, const Polynomial<K>& d) {
    auto q = p.divide_exact(d);
    return *q;
  };
  Polynomial<K> a = divide_out(f, cf), b = divide_out(g, cg);
  UPoly<K> ua = to_univariate(a, v), ub = to_univariate(b, v);
  if (ua.size() < ub.size()) std::swap(ua, ub);

  // primitive polynomial remainder sequence
  Polynomial<K> part;
  while (true) {
    UPoly<K> r = pseudo_rem(ua, ub);
    if (r.empty()) {
      part = from_univariate(ub, v);
      break;
    }
    if (r.size() == 1) {
      part = Polynomial<K>(K::one());
      break;
    }
    Polynomial<K> rp = from_univariate(r, v);
    Polynomial<K> cr = content_in(r);
    rp = divide_out(rp, cr);
    ua = std::move(ub);
    ub = to_univariate(rp, v);
  }
  return (c * part).monic();
}

// Exact coprimality certificate: the gcd is free of variable v whenever a
// single-variable image of f keeps full v-degree and gcd(f|, g|) = 1 mod p
// (the gcd's leading coefficient divides f's, so it cannot vanish at the
// sample point). All three variables certified free means the gcd is 1.
template <class K>
bool coprime_certificate(const Polynomial<K>& f, const Polynomial<K>& g) {
  static const std::uint64_t kPrimes[] = {1000003, 1000033, 1000037,
                                          1000039, 1000081, 1000099};
  SplitMix64 rng(0x6f726269ULL);
  for (int v = 0; v < kNumVars; ++v) {
    int dv = std::min(f.degree_in(v), g.degree_in(v));
    if (dv == 0) continue;
    const Polynomial<K>& lead = f.degree_in(v) <= g.degree_in(v) ? f : g;
    const Polynomial<K>& other = f.degree_in(v) <= g.degree_in(v) ? g : f;
    bool certified = false;
    for (int attempt = 0; attempt < 4 && !certified; ++attempt) {
      std::uint64_t p = kPrimes[attempt % std::size(kPrimes)];
      auto unit = prime_unit<K>(p);
      if (!unit) continue;
      std::array<std::uint64_t, 3> pt{};
      for (int i = 0; i < kNumVars; ++i)
        pt[i] = i == v ? 0 : 1 + rng.below(p - 1);
      auto img = [&](const Polynomial<K>& h) -> std::optional<modp::Poly> {
        modp::Poly u(h.degree_in(v) + 1, 0);
        for (auto& [m, cf2] : h.terms()) {
          auto cv = cf2.mod_p(p, *unit);
          if (!cv) return std::nullopt;
          std::uint64_t t = *cv;
          for (int i = 0; i < kNumVars; ++i) {
            if (i == v) continue;
            t = t * mod_pow(pt[i], m.e[i], p) % p;
          }
          u[m.e[v]] = (u[m.e[v]] + t) % p;
        }
        modp::normalize(u);
        return u;
      };
      auto fi = img(lead), gi = img(other);
      if (!fi || !gi) continue;
      if (modp::degree(*fi) != lead.degree_in(v)) continue;
      if (modp::degree(modp::gcd(*fi, *gi, p)) == 0) certified = true;
    }
    if (!certified) return false;
  }
  return true;
}

}  // namespace detail

// Greatest common divisor, normalized to graded-lex leading coefficient 1.
template <class K>
Polynomial<K> poly_gcd(const Polynomial<K>& f, const Polynomial<K>& g) {
  if (f.is_zero() && g.is_zero()) throw BothZero();
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return Polynomial<K>(K::one());
  if (detail::coprime_certificate(f, g)) return Polynomial<K>(K::one());
  return detail::gcd_impl(f, g);
}

}  // namespace orbipencil
