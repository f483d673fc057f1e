#pragma once

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "orbipencil/gcd.hpp"
#include "orbipencil/polynomial.hpp"

namespace orbipencil {

// f = unit * prod(base_i ^ exp_i), bases squarefree, pairwise coprime,
// exponents strictly increasing.
template <class K>
struct SquarefreeDecomposition {
  K unit = K::one();
  std::vector<std::pair<Polynomial<K>, long>> factors;

  Polynomial<K> reconstruct() const {
    Polynomial<K> r(unit);
    for (auto& [b, e] : factors) r = r * b.pow(e);
    return r;
  }
};

// Iterated gcd of f with its three partials: the gcd drops every repeated
// factor by exactly one power in characteristic zero, so peeling multiplicity
// classes off the radical recovers the full decomposition.
template <class K>
SquarefreeDecomposition<K> squarefree_decomposition(const Polynomial<K>& f) {
  if (f.is_zero()) throw ZeroInput("squarefree_decomposition");
  SquarefreeDecomposition<K> out;
  if (f.is_constant()) {
    out.unit = f.constant_value();
    return out;
  }

  Polynomial<K> g = f;
  for (int v = 0; v < kNumVars; ++v) {
    Polynomial<K> d = f.derivative(v);
    if (!d.is_zero()) g = poly_gcd(g, d);
    if (g.is_constant()) break;
  }

  Polynomial<K> rad = *f.divide_exact(g);
  rad = rad.monic();
  long i = 1;
  while (!g.is_constant()) {
    Polynomial<K> h = poly_gcd(g, rad);
    Polynomial<K> q = *rad.divide_exact(h);
    if (!q.is_constant()) out.factors.emplace_back(q.monic(), i);
    rad = h;
    g = *g.divide_exact(h);
    g = g.monic();
    ++i;
  }
  if (!rad.is_constant()) out.factors.emplace_back(rad.monic(), i);

  Polynomial<K> prod(K::one());
  for (auto& [b, e] : out.factors) prod = prod * b.pow(e);
  out.unit = (*f.divide_exact(prod)).constant_value();
  return out;
}

// gcd of the multiplicities in the squarefree decomposition; 1 for reduced f
template <class K>
long divisor_multiplicity(const SquarefreeDecomposition<K>& d) {
  long m = 0;
  for (auto& [b, e] : d.factors) m = std::gcd(m, e);
  return m == 0 ? 1 : m;
}

// h with h^k = f up to a nonzero scalar (projective convention), or nullopt.
// A root exists exactly when k divides every squarefree exponent.
template <class K>
std::optional<Polynomial<K>> kth_power_root(const Polynomial<K>& f, long k) {
  if (f.is_zero()) throw ZeroInput("kth_power_root");
  if (k < 2) throw BadInput("kth_power_root needs k >= 2");
  auto d = squarefree_decomposition(f);
  Polynomial<K> root(K::one());
  for (auto& [b, e] : d.factors) {
    if (e % k != 0) return std::nullopt;
    root = root * b.pow(e / k);
  }
  if (root.is_constant()) return std::nullopt;  // constants are not curves
  return root.monic();
}

}  // namespace orbipencil
