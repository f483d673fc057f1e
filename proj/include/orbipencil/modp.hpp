#pragma once

#include <cstdint>
#include <vector>

namespace orbipencil::modp {

// Univariate polynomials over F_p, coefficients low-to-high, p < 2^31.
using Poly = std::vector<std::uint64_t>;

void normalize(Poly& f);
int degree(const Poly& f);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
Poly rem(Poly a, const Poly& b, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
Poly derivative(const Poly& f, std::uint64_t p);
Poly pow_mod(Poly base, std::uint64_t e, const Poly& mod, std::uint64_t p);

bool is_squarefree(const Poly& f, std::uint64_t p);

// Number of irreducible factors of a squarefree f: the nullity of the
// Berlekamp map c -> c^p - c on F_p[x]/(f). 1 means irreducible.
int berlekamp_factor_count(const Poly& f, std::uint64_t p);

bool is_irreducible(const Poly& f, std::uint64_t p);

}  // namespace orbipencil::modp
