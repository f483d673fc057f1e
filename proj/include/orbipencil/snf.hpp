#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "orbipencil/presentation.hpp"

namespace orbipencil {

using IntMat = std::vector<std::vector<mpz_class>>;

struct SnfResult {
  std::vector<mpz_class> invariant_factors;  // d1 | d2 | ..., units included
  long rank = 0;
};

// Smith normal form by unimodular row/column operations; deterministic.
SnfResult snf(IntMat m);

// Invariants of a finitely generated abelian group Z^free x prod Z_d,
// torsion in a divisibility chain with unit factors dropped.
struct AbelianInvariants {
  long free_rank = 0;
  std::vector<mpz_class> torsion;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
  std::string str() const;
};

// cokernel of the row span inside Z^cols
AbelianInvariants cokernel(const IntMat& m, long cols);

// SNF of the relator exponent-sum matrix
AbelianInvariants abelianize(const Presentation& p);

}  // namespace orbipencil
