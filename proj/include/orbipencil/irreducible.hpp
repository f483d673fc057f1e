#pragma once

#include <array>
#include <cstdint>

#include "orbipencil/modp.hpp"
#include "orbipencil/polynomial.hpp"
#include "orbipencil/rng.hpp"

namespace orbipencil {

enum class IrredVerdict { Irreducible, Unknown };

namespace detail {

template <class K>
const std::vector<std::uint64_t>& slice_primes() {
  // for Q(sqrt 3) only primes with 3 a quadratic residue are usable
  static const std::vector<std::uint64_t> all = {3,  5,  7,  11, 13, 17, 19, 23,
                                                 29, 31, 37, 41, 43, 47, 53, 59,
                                                 61, 67, 71, 73, 79, 83, 89, 97};
  static const std::vector<std::uint64_t> usable = [] {
    std::vector<std::uint64_t> v;
    for (auto p : all)
      if (prime_unit<K>(p)) v.push_back(p);
    return v;
  }();
  return usable;
}

}  // namespace detail

// Certificate of irreducibility over the rationals. A factorization of f
// restricts to a factorization of any full-degree line section, so a section
// that is irreducible of full degree modulo some prime certifies f. The
// verdict is one-sided: Irreducible is always correct, Unknown is not a
// reducibility proof. Irreducibility over the complex numbers is not decided
// here (degree-based cases are handled where they are needed).
template <class K>
IrredVerdict is_irreducible_probabilistic(const Polynomial<K>& f, std::uint64_t seed,
                                          int trials) {
  if (f.is_zero() || f.is_constant() || !f.is_homogeneous())
    throw BadInput("is_irreducible_probabilistic expects a homogeneous nonconstant form");
  int d = f.degree();
  if (d == 1) return IrredVerdict::Irreducible;

  SplitMix64 rng(seed ^ 0x736c696365ULL);
  const auto& primes = detail::slice_primes<K>();
  int degenerate = 0;
  for (int t = 0; t < trials; ++t) {
    std::array<long, 3> v0, v1;
    for (int i = 0; i < 3; ++i) {
      v0[i] = rng.range(-9, 9);
      v1[i] = rng.range(-9, 9);
    }
    auto coeffs = f.restrict_to_line(v0, v1);
    if (static_cast<int>(coeffs.size()) != d + 1) {
      ++degenerate;  // line not in general position for f
      continue;
    }
    for (auto p : primes) {
      auto unit = prime_unit<K>(p);
      modp::Poly u(coeffs.size());
      bool ok = true;
      for (std::size_t i = 0; i < coeffs.size() && ok; ++i) {
        auto cv = coeffs[i].mod_p(p, *unit);
        if (!cv)
          ok = false;
        else
          u[i] = *cv;
      }
      if (!ok) continue;
      modp::normalize(u);
      if (modp::degree(u) != d) continue;  // leading coefficient vanished mod p
      if (modp::is_irreducible(u, p)) return IrredVerdict::Irreducible;
    }
  }
  if (degenerate == trials) throw DegenerateSlice();
  return IrredVerdict::Unknown;
}

}  // namespace orbipencil
